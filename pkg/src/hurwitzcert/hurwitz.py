"""The braid-group action on tuples of invertible matrices.

A generator move at index i (1-based, 1 <= i <= n-1) sends
(s_1, .., s_i, s_{i+1}, .., s_n) to (s_1, .., s_{i+1}, s_{i+1}^{-1} s_i s_{i+1}, .., s_n),
its inverse conjugates the other way and swaps back. Both preserve the
ordered product of the tuple.

Convention: a braid *word* is a list of moves applied in list order (the
serialized form "2 -1 3" applies sigma_2 first). When a product of sigmas is
read as a composition of functions, the rightmost factor acts first; the
cycling element gamma = sigma_1 ... sigma_{n-1} therefore applies
sigma_{n-1} first, which is exactly the convention that reproduces the
one-step cycling formula gamma(s_1,..,s_n) = (s_n, s_1, .., s_{n-1})
conjugated entrywise by s_n. Orbit enumeration is a deterministic
breadth-first closure with exact dedup on canonical keys, so byte-identical
output across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BadSubsequence, IndexOutOfRange
from .exactlinalg import Matrix
from .reflection import ReflectionTuple


@dataclass(frozen=True)
class BraidMove:
    """sigma_index or its inverse; index is 1-based, valid range 1..n-1."""

    index: int
    inverse: bool = False

    def inverted(self):
        return BraidMove(self.index, not self.inverse)

    def __str__(self):
        return str(-self.index if self.inverse else self.index)


def word_to_string(word):
    return " ".join(str(m) for m in word)


def word_from_string(text):
    moves = []
    for tok in text.split():
        k = int(tok)
        if k == 0:
            raise IndexOutOfRange("braid letters are nonzero signed integers")
        moves.append(BraidMove(abs(k), k < 0))
    return moves


class TupleState:
    """An ordered tuple of same-shape invertible matrices, hash-cached."""

    __slots__ = ("entries", "_hash", "_involutive")

    def __init__(self, entries, _involutive=None):
        self.entries = tuple(entries)
        self._hash = None
        self._involutive = _involutive

    @classmethod
    def from_reflections(cls, tup: ReflectionTuple):
        return cls(tup.refs, _involutive=True)

    @property
    def n(self):
        return len(self.entries)

    def key(self):
        return tuple(m.key() for m in self.entries)

    def key_string(self):
        return "|".join(m.key_string() for m in self.entries)

    def product(self):
        acc = self.entries[0]
        for m in self.entries[1:]:
            acc = acc * m
        return acc

    def _all_involutive(self):
        if self._involutive is None:
            ident = Matrix.identity(self.entries[0].field, self.entries[0].nrows)
            self._involutive = all(m * m == ident for m in self.entries)
        return self._involutive

    def __eq__(self, other):
        if not isinstance(other, TupleState):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self):
        return f"TupleState(n={self.n})"


def sigma_apply(move, state):
    """Apply one braid generator (or inverse) to a tuple state."""
    n = state.n
    if n < 2:
        raise IndexOutOfRange("braid moves need a tuple of length >= 2")
    i = move.index
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"move index {i} out of range 1..{n - 1}")
    entries = list(state.entries)
    a, b = entries[i - 1], entries[i]
    involutive = state._all_involutive()
    if move.inverse:
        # (.., a, b, ..) -> (.., a b a^{-1}, a, ..)
        a_inv = a if involutive else a.inverse()
        entries[i - 1] = a * b * a_inv
        entries[i] = a
    else:
        # (.., a, b, ..) -> (.., b, b^{-1} a b, ..)
        b_inv = b if involutive else b.inverse()
        entries[i - 1] = b
        entries[i] = b_inv * a * b
    return TupleState(entries, _involutive=involutive)


def apply_word(word, state):
    """Apply a braid word, first move first."""
    for move in word:
        state = sigma_apply(move, state)
    return state


def gamma_apply(state):
    """The cycling element gamma = sigma_1 ... sigma_{n-1} (rightmost acts first)."""
    n = state.n
    if n < 2:
        raise IndexOutOfRange("gamma needs a tuple of length >= 2")
    for i in range(n - 1, 0, -1):
        state = sigma_apply(BraidMove(i), state)
    return state


def gamma_power_check(state):
    """Whether gamma^n(t) equals t conjugated entrywise by the product c.

    This is an identity of the action and must hold for every tuple; it is
    exposed as a runnable check rather than assumed.
    """
    n = state.n
    if n < 2:
        raise IndexOutOfRange("gamma needs a tuple of length >= 2")
    cycled = state
    for _ in range(n):
        cycled = gamma_apply(cycled)
    c = state.product()
    c_inv = c.inverse()
    conjugated = TupleState([c_inv * m * c for m in state.entries])
    return cycled == conjugated


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of the breadth-first orbit closure.

    status "complete" means the closure stabilized with fewer than cap
    states; finding the cap-th distinct state stops the search with status
    "cap_exceeded" and size == cap. keys lists canonical state keys in
    discovery order; states carries the actual TupleStates when requested.
    """

    status: str
    size: int
    cap: int
    keys: tuple
    states: tuple | None = None

    @property
    def complete(self):
        return self.status == "complete"


def orbit(state, cap, keep_states=True):
    """Breadth-first closure of a state under all sigma_i and inverses."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = state.n
    moves = []
    for i in range(1, n):
        moves.append(BraidMove(i))
        moves.append(BraidMove(i, inverse=True))
    start_key = state.key()
    seen = {start_key}
    keys = [start_key]
    states = [state] if keep_states else None
    queue = deque([state])
    if len(seen) >= cap:
        return OrbitResult("cap_exceeded", len(seen), cap, tuple(keys),
                           tuple(states) if keep_states else None)
    while queue:
        current = queue.popleft()
        for move in moves:
            nxt = sigma_apply(move, current)
            k = nxt.key()
            if k in seen:
                continue
            seen.add(k)
            keys.append(k)
            if keep_states:
                states.append(nxt)
            if len(seen) >= cap:
                return OrbitResult("cap_exceeded", len(seen), cap, tuple(keys),
                                   tuple(states) if keep_states else None)
            queue.append(nxt)
    return OrbitResult("complete", len(seen), cap, tuple(keys),
                       tuple(states) if keep_states else None)


def prefix_realize(state, indices):
    """A braid word moving the chosen entries, untouched, to the front.

    indices is a strictly increasing subsequence of 1..n. Every index *not*
    chosen is expelled to the back of the tuple (largest first) by the word
    sigma_j sigma_{j+1} ... sigma_{n-1}, which conjugates only the expelled
    entry; the chosen entries therefore survive as exactly the original
    matrices, in order, at the front. Returns (word, resulting state).
    """
    n = state.n
    idx = list(indices)
    if any(not isinstance(i, int) for i in idx):
        raise BadSubsequence("indices must be integers")
    if any(i < 1 or i > n for i in idx):
        raise BadSubsequence(f"indices must lie in 1..{n}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise BadSubsequence("indices must be strictly increasing")
    complement = [j for j in range(1, n + 1) if j not in set(idx)]
    word = []
    for j in sorted(complement, reverse=True):
        word.extend(BraidMove(i) for i in range(j, n))
    result = apply_word(word, state)
    for pos, want in enumerate(idx):
        if result.entries[pos] != state.entries[want - 1]:
            raise AssertionError("prefix realization failed")  # pragma: no cover
    return word, result
