"""Generator labels for the four encoded bases of the cr(1,3) algebra.

Bases and their families:

  complex   Z[a,b] (16), A+[a], A-[a] (8), I            -- ladder basis
  real      L[a,b] a<b (6), M[a,b] a<=b (10), X[a], Y[a], I
  physical  J[i], K[i], N[i] (i=1..3), R0, M[i,j] spatial, X[a], Y[a], I
  contracted J[i], G[i], F[i], R0, T0, E0, Q[i], P[i], I  -- Newtonian limit

L is antisymmetric and M symmetric in the index pair, so only the canonical
order is stored; `canonical` returns the stored id together with the sign
picked up by reordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import ExactC, ONE, MINUS_ONE, ZERO

COMPLEX = "complex"
REAL = "real"
PHYSICAL = "physical"
CONTRACTED = "contracted"

# family -> index arity
ARITY = {
    "Z": 2, "A+": 1, "A-": 1, "I": 0,
    "L": 2, "M": 2, "X": 1, "Y": 1,
    "J": 1, "K": 1, "N": 1, "R0": 0,
    "G": 1, "F": 1, "T0": 0, "E0": 0, "Q": 1, "P": 1,
}

_FAMILY_RANK = {f: r for r, f in enumerate(
    ["Z", "A+", "A-", "L", "M", "J", "K", "N", "G", "F",
     "R0", "T0", "E0", "Q", "P", "X", "Y", "I"])}


@dataclass(frozen=True, order=False)
class GeneratorId:
    family: str
    indices: tuple = ()

    def __post_init__(self):
        if self.family not in ARITY:
            raise ValueError(f"unknown generator family {self.family!r}")
        if len(self.indices) != ARITY[self.family]:
            raise ValueError(
                f"{self.family} takes {ARITY[self.family]} indices, got {self.indices}")

    def sort_key(self):
        return (_FAMILY_RANK[self.family], self.indices)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.indices:
            return self.family
        return f"{self.family}[{','.join(map(str, self.indices))}]"


def gid(family: str, *indices: int) -> GeneratorId:
    return GeneratorId(family, tuple(indices))


def canonical(family: str, *indices: int) -> tuple:
    """Canonical (GeneratorId, sign) pair; sign is an ExactC in {1, -1, 0}.

    L[a,a] is identically zero (sign 0); L[b,a] = -L[a,b]; M stored sorted.
    """
    if family == "L":
        a, b = indices
        if a == b:
            return gid("L", a, b), ZERO
        if a > b:
            return gid("L", b, a), MINUS_ONE
        return gid("L", a, b), ONE
    if family == "M":
        a, b = indices
        if a > b:
            a, b = b, a
        return gid("M", a, b), ONE
    return gid(family, *indices), ONE


def basis_generators(kind: str) -> tuple:
    """Canonically ordered generator tuple of one of the four bases."""
    out = []
    if kind == COMPLEX:
        out += [gid("Z", a, b) for a in range(4) for b in range(4)]
        out += [gid("A+", a) for a in range(4)]
        out += [gid("A-", a) for a in range(4)]
        out.append(gid("I"))
    elif kind == REAL:
        out += [gid("L", a, b) for a in range(4) for b in range(a + 1, 4)]
        out += [gid("M", a, b) for a in range(4) for b in range(a, 4)]
        out += [gid("X", a) for a in range(4)]
        out += [gid("Y", a) for a in range(4)]
        out.append(gid("I"))
    elif kind == PHYSICAL:
        out += [gid("J", i) for i in (1, 2, 3)]
        out += [gid("K", i) for i in (1, 2, 3)]
        out += [gid("N", i) for i in (1, 2, 3)]
        out.append(gid("R0"))
        out += [gid("M", i, j) for i in (1, 2, 3) for j in range(i, 4)]
        out += [gid("X", a) for a in range(4)]
        out += [gid("Y", a) for a in range(4)]
        out.append(gid("I"))
    elif kind == CONTRACTED:
        out += [gid("J", i) for i in (1, 2, 3)]
        out += [gid("G", i) for i in (1, 2, 3)]
        out += [gid("F", i) for i in (1, 2, 3)]
        out += [gid("R0"), gid("T0"), gid("E0")]
        out += [gid("Q", i) for i in (1, 2, 3)]
        out += [gid("P", i) for i in (1, 2, 3)]
        out.append(gid("I"))
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    return tuple(sorted(out, key=GeneratorId.sort_key))


# Minkowski signs eta = diag(-1,1,1,1); exact.
def eta(a: int, b: int) -> int:
    if a != b:
        return 0
    return -1 if a == 0 else 1


def eps3(i: int, j: int, k: int) -> int:
    """Levi-Civita on {1,2,3}."""
    return ((i - j) * (j - k) * (k - i)) // 2 if {i, j, k} == {1, 2, 3} else 0
