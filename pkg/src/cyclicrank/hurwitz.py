"""Branched covers of the line as permutation tuples, and braid orbits.

A degree-n cover of P^1 branched at m points corresponds to a tuple
(s_1, ..., s_m) of permutations with s_1 ... s_m = 1 generating a
transitive group, up to simultaneous conjugation.  Moving the branch
points around each other acts on such tuples through Hurwitz moves.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass

from . import _perm
from .errors import CycleParseError, OrbitCapError, PreconditionError
from .superelliptic import riemann_hurwitz

POLICIES = ("standard", "pure", "full")
DEFAULT_CAP = 10 ** 6


def _check_perm(p, n):
    if len(p) != n or sorted(p) != list(range(n)):
        raise ValueError(f"{p!r} is not a permutation of 0..{n - 1}")


@dataclass(frozen=True)
class HurwitzTuple:
    """Permutations of {0..n-1} (one per branch point); the first k positions move."""

    n: int
    flat: bytes
    moving_count: int = 0

    def __post_init__(self):
        if self.n < 1 or self.n > 255:
            raise ValueError("n must lie in 1..255")
        if len(self.flat) % self.n:
            raise ValueError("flat data length is not a multiple of n")
        if not 0 <= self.moving_count <= self.m:
            raise ValueError("moving_count out of range")

    @classmethod
    def from_perms(cls, perms, moving_count=0, n=None):
        perms = [tuple(p) for p in perms]
        if n is None:
            if not perms:
                raise ValueError("need n for an empty tuple")
            n = len(perms[0])
        for p in perms:
            _check_perm(p, n)
        return cls(n, bytes(x for p in perms for x in p), moving_count)

    @property
    def m(self):
        return len(self.flat) // self.n

    @property
    def perms(self):
        n = self.n
        return tuple(tuple(self.flat[j * n:(j + 1) * n]) for j in range(self.m))

    def with_moving(self, k):
        return HurwitzTuple(self.n, self.flat, k)

    def cycle_types(self):
        return tuple(cycle_type(p) for p in self.perms)

    def canonical(self):
        return _perm.canonical_form(self.flat, self.n, self.m)

    def conjugate(self, c):
        """Simultaneous conjugation s -> c s c^-1."""
        c = bytes(c)
        ci = _perm.inv(c)
        return HurwitzTuple(self.n, b"".join(
            _perm.mul(_perm.mul(c, bytes(p)), ci) for p in self.perms), self.moving_count)

    def __str__(self):
        return format_tuple(self)


def cycle_type(p):
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def validate(t):
    """Product-one and transitivity."""
    if t.m == 0:
        return t.n == 1
    return bool(_perm.product_is_identity(t.flat, t.n, t.m)
                and _perm.is_transitive(t.flat, t.n, t.m))


def genus_of(t):
    if not validate(t):
        raise PreconditionError("tuple is not a valid cover (product-one and transitivity)",
                                "s_1...s_m = 1, transitive")
    profile = [ct for ct in t.cycle_types() if any(c > 1 for c in ct)]
    return riemann_hurwitz(t.n, 0, profile)


def cyclic_tuple(n, m, moving_count=0):
    """m copies of the standard n-cycle."""
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}", "n >= 2")
    if m % n:
        raise PreconditionError(f"n must divide m ({n} does not divide {m})", "n | m")
    cyc = tuple((i + 1) % n for i in range(n))
    return HurwitzTuple.from_perms([cyc] * m, moving_count)


def hurwitz_move(t, i):
    """Move at positions (i, i+1), 1-based."""
    if not 1 <= i < t.m:
        raise IndexError(f"move index {i} outside 1..{t.m - 1}")
    return HurwitzTuple(t.n, _perm.hurwitz_move(t.flat, t.n, i - 1), t.moving_count)


def hurwitz_move_inverse(t, i):
    if not 1 <= i < t.m:
        raise IndexError(f"move index {i} outside 1..{t.m - 1}")
    return HurwitzTuple(t.n, _perm.hurwitz_move_inverse(t.flat, t.n, i - 1),
                        t.moving_count)


def apply_word(t, word):
    for letter in word:
        if not 1 <= abs(letter) < t.m:
            raise IndexError(f"braid letter {letter} outside +-1..{t.m - 1}")
    return HurwitzTuple(t.n, _perm.apply_braid_word(t.flat, t.n, list(word)),
                        t.moving_count)


# -- cycle notation -------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, n=None):
    """Product of cycles like "(1 2 3)(4 5)", symbols 1-based, rightmost applied first."""
    text = text.strip()
    if text in ("", "()", "id", "e"):
        cycles = []
    else:
        pos = 0
        cycles = []
        for mt in _CYCLE.finditer(text):
            gap = text[pos:mt.start()]
            if gap.strip():
                raise CycleParseError(f"unexpected text {gap.strip()!r} in {text!r}")
            pos = mt.end()
            body = mt.group(1).replace(",", " ").split()
            try:
                cyc = [int(x) for x in body]
            except ValueError:
                raise CycleParseError(f"non-integer symbol in cycle ({mt.group(1)})") from None
            if len(set(cyc)) != len(cyc):
                raise CycleParseError(f"repeated symbol in cycle ({mt.group(1)})")
            if any(x < 1 for x in cyc):
                raise CycleParseError(f"symbols must be positive in ({mt.group(1)})")
            cycles.append(cyc)
        if text[pos:].strip():
            raise CycleParseError(f"unbalanced or trailing text {text[pos:].strip()!r}")
        if not cycles:
            raise CycleParseError(f"no cycles found in {text!r}")
    top = max((x for c in cycles for x in c), default=1)
    if n is None:
        n = top
    elif top > n:
        raise CycleParseError(f"symbol {top} exceeds degree {n}")
    perm = list(range(n))
    for cyc in reversed(cycles):
        step = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            step[a - 1] = b - 1
        perm = [step[x] for x in perm]
    return tuple(perm)


def parse_tuple(text, moving_count=0, n=None):
    """Semicolon-separated positions, each a product of cycles."""
    parts = text.split(";")
    if n is None:
        n = 1
        for part in parts:
            nums = re.findall(r"\d+", part)
            if nums:
                n = max(n, max(int(x) for x in nums))
    perms = [parse_permutation(part, n) for part in parts]
    return HurwitzTuple.from_perms(perms, moving_count, n)


def format_permutation(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def format_tuple(t):
    return ";".join(format_permutation(p) for p in t.perms)


# -- braid orbits ---------------------------------------------------------

def pure_braid_word(i, j):
    """A_ij = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1, 1-based positions i < j."""
    up = list(range(j - 1, i, -1))
    return up + [i, i] + [-x for x in reversed(up)]


def generator_words(m, k, policy="standard"):
    if policy == "full":
        return [[i] for i in range(1, m)]
    if policy == "pure":
        return [pure_braid_word(i, j) for i in range(1, m) for j in range(i + 1, m + 1)]
    if policy == "standard":
        words = [[i] for i in range(1, k)]
        words += [pure_braid_word(i, j) for i in range(1, k + 1) for j in range(k + 1, m + 1)]
        return words
    raise ValueError(f"unknown generator policy {policy!r}; choose from {POLICIES}")


@dataclass(frozen=True)
class MonodromyAction:
    cover_classes: tuple
    generators: tuple
    policy: str
    n: int
    m: int

    @property
    def N(self):
        return len(self.cover_classes)

    def image_order(self):
        if self.N == 1 or not self.generators:
            return 1
        from sympy.combinatorics import Permutation, PermutationGroup
        return int(PermutationGroup([Permutation(list(g)) for g in self.generators]).order())

    def kernel_index(self):
        # pi_1 / ker(rho) is isomorphic to the image
        return self.image_order()

    def to_dict(self):
        order = self.image_order()
        return {"N": self.N, "image_order": order, "kernel_index": order,
                "policy": self.policy}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def braid_orbit(t, policy="standard", cap=DEFAULT_CAP, traversal="bfs"):
    """Orbit of the conjugacy class of t under the chosen braid generators."""
    if not validate(t):
        raise PreconditionError("tuple is not a valid cover (product-one and transitivity)",
                                "s_1...s_m = 1, transitive")
    if traversal not in ("bfs", "dfs"):
        raise ValueError("traversal must be 'bfs' or 'dfs'")
    n, m = t.n, t.m
    words = generator_words(m, t.moving_count, policy)
    start = _perm.canonical_form(t.flat, n, m)
    seen = {start}
    edges = {}
    frontier = deque([start])
    while frontier:
        cur = frontier.popleft() if traversal == "bfs" else frontier.pop()
        images = []
        for w in words:
            nxt = _perm.canonical_form(_perm.apply_braid_word(cur, n, w), n, m)
            images.append(nxt)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise OrbitCapError(f"orbit exceeds the cap of {cap} classes")
                frontier.append(nxt)
        edges[cur] = images
    classes = tuple(sorted(seen))
    index = {c: i for i, c in enumerate(classes)}
    gens = []
    for g in range(len(words)):
        img = tuple(index[edges[c][g]] for c in classes)
        if sorted(img) != list(range(len(classes))):
            raise AssertionError("braid generator did not act bijectively")
        gens.append(img)
    return MonodromyAction(classes, tuple(gens), policy, n, m)
