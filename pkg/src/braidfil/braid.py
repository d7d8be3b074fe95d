"""Words in the 3-strand braid group: normal forms and quasipositivity.

A braid word is a sequence of signed generator indices: +1, +2 for the
Artin generators, -1, -2 for their inverses.  `D` in the text grammar is
the half twist (Garside element) sigma_1 sigma_2 sigma_1.

The module provides
  * exact group equality through the reduced Burau representation
    (faithful on 3 strands, with integer Laurent polynomial entries),
  * the left-greedy normal form in the positive monoid (simples are the
    six divisors of the half twist, i.e. the six permutations of S3),
  * conjugacy normal form: the maximal power m with beta = beta_+ D^m over
    the conjugacy class, found by cycling, plus the alternating block
    shape of beta_+,
  * the subword-deletion quasipositivity test, as a dynamic program over
    left divisors of D^p, with an exponential brute-force twin.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

DELTA_LETTERS = (1, 2, 1)

# ---------------------------------------------------------------------------
# S3 tables: permutations as image tuples, products apply the right factor
# first, so a positive braid word maps to the left-to-right product of its
# letter transpositions.
# ---------------------------------------------------------------------------

_E = (0, 1, 2)
_S1 = (1, 0, 2)
_S2 = (0, 2, 1)
_W0 = (2, 1, 0)


def _pmul(p: tuple, q: tuple) -> tuple:
    """Group product p*q (apply q first)."""
    return (p[q[0]], p[q[1]], p[q[2]])


def _plen(p: tuple) -> int:
    """Coxeter length = inversion count."""
    return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])


_PERMS = [_E, _S1, _S2, _pmul(_S1, _S2), _pmul(_S2, _S1), _W0]
_GEN = {1: _S1, 2: _S2}

# reduced words lifting each permutation to a positive braid word
_PERM_WORD = {
    _E: (),
    _S1: (1,),
    _S2: (2,),
    _pmul(_S1, _S2): (1, 2),
    _pmul(_S2, _S1): (2, 1),
    _W0: (1, 2, 1),
}

_LEFT_DESC = {p: frozenset(i for i in (1, 2) if _plen(_pmul(_GEN[i], p)) < _plen(p)) for p in _PERMS}
_RIGHT_DESC = {p: frozenset(i for i in (1, 2) if _plen(_pmul(p, _GEN[i])) < _plen(p)) for p in _PERMS}


def _perm_of_positive(letters: Sequence[int]) -> tuple:
    p = _E
    for i in letters:
        p = _pmul(p, _GEN[i])
    return p


# ---------------------------------------------------------------------------
# Braid words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """A word in the 3-strand braid group as a tuple of signed letters."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for x in self.letters:
            if abs(x) not in (1, 2):
                raise ValueError(f"generator index out of range: {x}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def flip(self) -> "BraidWord":
        """The image under the half-twist automorphism (1 <-> 2)."""
        table = {1: 2, 2: 1, -1: -2, -2: -1}
        return BraidWord(tuple(table[x] for x in self.letters))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def signed_length(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> tuple:
        p = _E
        for x in self.letters:
            p = _pmul(p, _GEN[abs(x)])
        return p

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else ""

    @staticmethod
    def delta(power: int = 1) -> "BraidWord":
        if power >= 0:
            return BraidWord(DELTA_LETTERS * power)
        return BraidWord(tuple(-x for x in reversed(DELTA_LETTERS * (-power))))


def signed_length(w: BraidWord) -> int:
    return w.signed_length()


# ---------------------------------------------------------------------------
# Parsing.  Grammar: whitespace/comma-separated tokens;
# token = signed integer | D | token^int | ( words )^int
# A negative exponent inverts (reverse and negate) before repeating.
# ---------------------------------------------------------------------------


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _power(letters: tuple[int, ...], n: int) -> tuple[int, ...]:
    if n >= 0:
        return letters * n
    inv = tuple(-x for x in reversed(letters))
    return inv * (-n)


def parse_braid(text: str) -> BraidWord:
    s = text.replace(",", " ")
    pos = 0
    n = len(s)

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def parse_int() -> int:
        nonlocal pos
        start = pos
        if pos < n and s[pos] in "+-":
            pos += 1
        if pos >= n or not s[pos].isdigit():
            raise BraidSyntaxError("expected integer", start)
        while pos < n and s[pos].isdigit():
            pos += 1
        return int(s[start:pos])

    def parse_atom() -> tuple[int, ...]:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise BraidSyntaxError("unexpected end of input", pos)
        ch = s[pos]
        if ch == "(":
            pos += 1
            inner = parse_words(stop=")")
            if pos >= n or s[pos] != ")":
                raise BraidSyntaxError("unbalanced parenthesis", pos)
            pos += 1
            return inner
        if ch in "Dd":
            pos += 1
            return DELTA_LETTERS
        if ch in "+-" or ch.isdigit():
            start = pos
            value = parse_int()
            if value == 0 or abs(value) > 2:
                raise BraidSyntaxError(f"generator index outside 1..2: {value}", start)
            return (value,)
        raise BraidSyntaxError(f"unexpected character {ch!r}", pos)

    def parse_token() -> tuple[int, ...]:
        nonlocal pos
        letters = parse_atom()
        while pos < n and s[pos] == "^":
            pos += 1
            exp = parse_int()
            letters = _power(letters, exp)
        return letters

    def parse_words(stop: str | None = None) -> tuple[int, ...]:
        nonlocal pos
        out: list[int] = []
        while True:
            skip_ws()
            if pos >= n or (stop is not None and s[pos] == stop):
                return tuple(out)
            out.extend(parse_token())

    letters = parse_words()
    return BraidWord(letters)


# ---------------------------------------------------------------------------
# Reduced Burau representation: exact 2x2 matrices over Z[t, t^-1].
# sigma_1 -> [[-t, 1], [0, 1]],  sigma_2 -> [[1, 0], [t, -t]].
# Faithful for 3 strands, so matrix equality decides the word problem.
# ---------------------------------------------------------------------------

_Poly = dict  # {exponent: coeff}, zero coeffs never stored


def _padd(p: _Poly, q: _Poly) -> _Poly:
    out = dict(p)
    for k, c in q.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pmul2(p: _Poly, q: _Poly) -> _Poly:
    out: _Poly = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = k1 + k2
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


_BURAU = {
    1: (({1: -1}, {0: 1}), ({}, {0: 1})),
    2: (({0: 1}, {}), ({1: 1}, {1: -1})),
    -1: (({-1: -1}, {-1: 1}), ({}, {0: 1})),
    -2: (({0: 1}, {}), ({0: 1}, {-1: -1})),
}


def _mat_mul(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return (
        (_padd(_pmul2(a, e), _pmul2(b, g)), _padd(_pmul2(a, f), _pmul2(b, h))),
        (_padd(_pmul2(c, e), _pmul2(d, g)), _padd(_pmul2(c, f), _pmul2(d, h))),
    )


_MAT_ID = (({0: 1}, {}), ({}, {0: 1}))


def burau_matrix(w: BraidWord):
    M = _MAT_ID
    for x in w.letters:
        M = _mat_mul(M, _BURAU[x])
    return M


def group_equal(u: BraidWord, v: BraidWord) -> bool:
    """True iff u and v are the same element of the 3-strand braid group."""
    if u.signed_length() != v.signed_length():
        return False
    if u.permutation() != v.permutation():
        return False
    return burau_matrix(u) == burau_matrix(v)


# ---------------------------------------------------------------------------
# Positive monoid: left-greedy normal form over the six simples.
# ---------------------------------------------------------------------------


def _renorm_pair(x: tuple, y: tuple) -> tuple[tuple, tuple]:
    """Shift simple reflections from the head of y into the tail of x."""
    while True:
        moves = _LEFT_DESC[y] - _RIGHT_DESC[x]
        if not moves or x == _W0:
            return x, y
        s = min(moves)
        x = _pmul(x, _GEN[s])
        y = _pmul(_GEN[s], y)


def _normalize_factors(factors: Iterable[tuple]) -> list[tuple]:
    """Left-greedy normalization of a sequence of simples (E's dropped)."""
    fs = [f for f in factors if f != _E]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            x, y = _renorm_pair(fs[i], fs[i + 1])
            if (x, y) != (fs[i], fs[i + 1]):
                fs[i], fs[i + 1] = x, y
                changed = True
        fs = [f for f in fs if f != _E]
    return fs


def positive_normal_form(w: BraidWord | Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Left-greedy factorization of a positive word into simple factors.

    Two positive words are equal in the monoid iff their factorizations
    agree.  Factors are returned as positive letter tuples, e.g.
    sigma_1 sigma_1 sigma_2 -> ((1,), (1, 2)).
    """
    letters = list(w.letters if isinstance(w, BraidWord) else w)
    if any(x < 0 for x in letters):
        raise ValueError("positive_normal_form needs a positive word")
    fs = _normalize_factors(_GEN[x] for x in letters)
    return tuple(_PERM_WORD[f] for f in fs)


def monoid_equal(u: BraidWord | Sequence[int], v: BraidWord | Sequence[int]) -> bool:
    return positive_normal_form(u) == positive_normal_form(v)


def _nf_key(factors: Sequence[tuple]) -> tuple:
    """(delta power, non-delta factor tuple) for a normalized factor list."""
    i = 0
    while i < len(factors) and factors[i] == _W0:
        i += 1
    return i, tuple(factors[i:])


# ---------------------------------------------------------------------------
# Garside / conjugacy normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GarsideForm:
    """beta = beta_+ D^m with m maximal over the conjugacy class.

    blocks is the alternating exponent sequence (k_1, ..., k_r) of beta_+
    starting with a sigma_1 block; for odd m the list ends with the
    conventional k_r = 0 entry.  degenerate marks words (single-generator
    or too short) where the alternating shape is unattainable; their
    positive part is the summit representative as-is.
    """

    source: BraidWord
    positive_part: BraidWord
    m: int
    blocks: tuple[int, ...]
    degenerate: bool
    conjugator: BraidWord = field(default_factory=BraidWord)

    def word(self) -> BraidWord:
        """The representative beta_+ D^m as a braid word."""
        return self.positive_part * BraidWord.delta(self.m)

    def r(self) -> int:
        return len(self.blocks)

    def text(self) -> str:
        pos = self.positive_part.text()
        return (pos + " " if pos else "") + f"D^{self.m}"


def _left_nf(w: BraidWord) -> tuple[int, list[tuple]]:
    """Write w = D^p * (positive part) and normalize the positive part."""
    power = 0
    positive: list[int] = []
    lift = {1: (1, 2), 2: (2, 1)}
    for x in w.letters:
        if x > 0:
            positive.append(x)
        else:
            power -= 1
            positive = [3 - y for y in positive]  # slide D^-1 left past the word
            positive.extend(lift[-x])
    fs = _normalize_factors(_GEN[x] for x in positive)
    lead, rest = _nf_key(fs)
    return power + lead, list(rest)


def _tau(p: tuple) -> tuple:
    return _pmul(_pmul(_W0, p), _W0)


def _cycle_to_summit(power: int, factors: list[tuple]) -> tuple[int, list[tuple], BraidWord]:
    """Iterated cycling until the infimum is maximal; returns a conjugator c
    with  c^-1 * (input) * c = output."""
    conj: list[int] = []
    seen: set = set()
    while factors:
        state = (power, tuple(factors))
        if state in seen:
            break
        seen.add(state)
        head = factors[0]
        moved = _tau(head) if power % 2 else head
        fs = _normalize_factors(factors[1:] + [moved])
        lead, rest = _nf_key(fs)
        conj.extend(_PERM_WORD[moved])
        if lead:
            power += lead
            factors = list(rest)
            seen.clear()
        else:
            factors = list(rest)
    return power, factors, BraidWord(tuple(conj))


def _flat_word(factors: Sequence[tuple]) -> list[int]:
    out: list[int] = []
    for f in factors:
        out.extend(_PERM_WORD[f])
    return out


def _runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    """Run-length encoding [(generator, count), ...]."""
    out: list[tuple[int, int]] = []
    for x in letters:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def _extract_cyclic_delta(word: list[int], m: int) -> tuple[list[int], int, list[int], bool]:
    """Remove one cyclic half-twist factor (pattern 121 or 212, wrapping with
    the flip automorphism when m is odd) if present.

    Returns (new word, new m, conjugating word letters, changed flag).
    """
    n = len(word)
    if n < 3:
        return word, m, [], False
    flip = m % 2 == 1
    doubled = word + ([3 - x for x in word] if flip else word)
    for i in range(n):
        a, b, c = doubled[i : i + 3]
        if (a, b, c) in ((1, 2, 1), (2, 1, 2)):
            # rotate so the pattern is a prefix, then absorb it into D^m
            rot = word[i:] + ([3 - x for x in word[:i]] if flip else word[:i])
            rest = rot[3:]
            # D * rest * D^m = flip(rest) * D^(m+1)
            new_word = [3 - x for x in rest]
            return new_word, m + 1, word[:i], True
    return word, m, [], False


def garside_decompose(w: BraidWord) -> GarsideForm:
    """Conjugacy normal form beta ~ beta_+ D^m with m maximal."""
    power, factors = _left_nf(w)
    power, factors, conj1 = _cycle_to_summit(power, factors)

    # convert left form D^m * x to the right form beta_+ * D^m
    flat = _flat_word(factors)
    if power % 2:
        flat = [3 - x for x in flat]

    m = power
    conj_letters = list(conj1.letters)
    for _ in range(len(flat) + 3):
        flat, m, rot, changed = _extract_cyclic_delta(flat, m)
        conj_letters.extend(rot)
        if not changed:
            break

    word, blocks, degenerate, rot = _block_form(flat, m)
    conj_letters.extend(rot)

    conj = BraidWord(tuple(conj_letters))
    return GarsideForm(
        source=w,
        positive_part=BraidWord(tuple(word)),
        m=m,
        blocks=tuple(blocks),
        degenerate=degenerate,
        conjugator=conj,
    )


def _rotations(word: list[int], m: int):
    """All cyclic rotations (with the odd-m flip at the wrap), plus the
    full-flip variants, each with the conjugating word that realizes it."""
    n = len(word)
    flip = m % 2 == 1
    for i in range(n):
        rot = word[i:] + ([3 - x for x in word[:i]] if flip else word[:i])
        yield rot, word[:i], False
    # conjugating by a single half twist flips every letter
    flipped = [3 - x for x in word]
    for i in range(n):
        rot = flipped[i:] + ([3 - x for x in flipped[:i]] if flip else flipped[:i])
        yield rot, DELTA_LETTERS + tuple(flipped[:i]), True


def _block_form(word: list[int], m: int) -> tuple[list[int], list[int], bool, list[int]]:
    """Rotate the summit word into the alternating block shape.

    Even m: sigma_1^{k_1} sigma_2^{k_2} ... sigma_2^{k_r}, all k_i >= 2.
    Odd m: starts and ends with a sigma_1 block (k_r = 0 appended).
    Returns (word, blocks, degenerate, conjugator letters).
    """
    if not word:
        return word, [], False, []
    gens = set(word)
    if len(gens) == 1:
        return word, [len(word)], True, []

    best = None
    for rot, conj, _ in _rotations(word, m):
        runs = _runs(rot)
        if runs[0][0] != 1:
            continue
        if m % 2 == 0:
            if runs[-1][0] != 2:
                continue
            if all(k >= 2 for _, k in runs):
                ks = [k for _, k in runs]
                cand = (0, -ks[0], rot, ks, conj)
                if best is None or cand < best:
                    best = cand
        else:
            if runs[-1][0] != 1:
                continue
            interior_ok = all(k >= 2 for _, k in runs[1:-1])
            score = 0 if (interior_ok and runs[0][1] >= 2) else 1
            ks = [k for _, k in runs] + [0]
            cand = (score, -runs[0][1], rot, ks, conj)
            if best is None or cand < best:
                best = cand
    if best is None:
        return word, [k for _, k in _runs(word)], True, []
    _, _, rot, ks, conj = best
    return rot, ks, False, list(conj)


# ---------------------------------------------------------------------------
# Quasipositivity (subword deletion to D^-m in the positive monoid)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuasipositivityCertificate:
    verdict: bool
    witness: Optional[tuple[int, ...]] = None  # indices into positive_part


def orevkov_r_bound(m: int) -> int:
    """The block-count lower bound -floor((3m-2)/2) quoted for m < 0.

    Reported for information only; see qp_prefilter for what is enforced.
    """
    return -((3 * m - 2) // 2)


def qp_prefilter(f: GarsideForm) -> bool:
    """Cheap necessary condition: quasipositivity needs m >= 0 or enough
    positive letters to contain D^-m as a subword."""
    if f.m >= 0:
        return True
    return len(f.positive_part) >= -3 * f.m


@lru_cache(maxsize=None)
def _delta_divisor_keys(p: int) -> frozenset:
    """Normal-form keys of all left divisors of D^p."""
    start = (0, ())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for lead, rest in frontier:
            for g in (1, 2):
                fs = _normalize_factors([_W0] * lead + list(rest) + [_GEN[g]])
                key = _nf_key(fs)
                if key[0] + len(key[1]) <= p and key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return frozenset(seen)


def is_quasipositive(f: GarsideForm) -> QuasipositivityCertificate:
    """Orevkov's criterion, by dynamic programming over divisors of D^-m.

    States are monoid normal forms of left divisors of D^p (p = -m); a
    state extends by a letter only if the product still left-divides D^p.
    """
    if f.m >= 0:
        return QuasipositivityCertificate(True, ())
    p = -f.m
    letters = f.positive_part.letters
    if len(letters) < 3 * p:
        return QuasipositivityCertificate(False, None)
    divisors = _delta_divisor_keys(p)
    target = (p, ())
    # state key -> (factors, chosen index tuple)
    states: dict[tuple, tuple[list, tuple[int, ...]]] = {(0, ()): ([], ())}
    for idx, g in enumerate(letters):
        updates = {}
        for key, (fs, chosen) in states.items():
            nfs = _normalize_factors(fs + [_GEN[g]])
            nkey = _nf_key(nfs)
            if nkey in divisors and nkey not in states and nkey not in updates:
                updates[nkey] = (nfs, chosen + (idx,))
        states.update(updates)
        if target in states:
            return QuasipositivityCertificate(True, states[target][1])
    return QuasipositivityCertificate(False, None)


def quasipositive_bruteforce(f: GarsideForm) -> bool:
    """Subset enumeration twin of is_quasipositive (positive part <= 20)."""
    if f.m >= 0:
        return True
    letters = f.positive_part.letters
    if len(letters) > 20:
        raise ValueError("brute force capped at 20 letters")
    p = -f.m
    if len(letters) < 3 * p:
        return False
    target = positive_normal_form(DELTA_LETTERS * p)
    for subset in itertools.combinations(range(len(letters)), 3 * p):
        if positive_normal_form([letters[i] for i in subset]) == target:
            return True
    return False
