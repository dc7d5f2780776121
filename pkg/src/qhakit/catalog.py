"""Built-in example structures.

Five entries ship: a one-dimensional structure, cyclic group algebras,
the triangular structure on k[Z/2], Sweedler's four-dimensional algebra
(the smallest with S^2 != id), and the semion structure on k[Z/2] over
Q(zeta_4), whose coassociator is genuinely nontrivial.  Every entry
passes the full verifier battery at build time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CatalogError
from .scalars import RATIONAL, cyclotomic_field
from .structures import (QuasiAntipode, QuasiBialgebra, QuasiHopf,
                         QuasiTriangularQHA)
from .tensor import Algebra, LinearMap, tensor_of

_GROUP_RE = re.compile(r"^group_z(\d+)$")

BUILTIN_NAMES = ("trivial", "group_zn", "z2_triangular", "sweedler_h4", "semion")


@dataclass
class CatalogEntry:
    name: str
    structure: object  # QuasiHopf or QuasiTriangularQHA
    notes: str = ""
    dynamical: object | None = None  # optional DynamicalTwist family


def builtin(name: str) -> CatalogEntry:
    """Look up a built-in entry; group algebras parametrize as group_z<n>."""
    if name == "trivial":
        return _trivial()
    match = _GROUP_RE.match(name)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise CatalogError("group order must be positive")
        return _group_zn(n)
    if name == "z2_triangular":
        return _z2_triangular()
    if name == "sweedler_h4":
        return _sweedler_h4()
    if name == "semion":
        return _semion()
    raise CatalogError(
        f"unknown builtin {name!r}; available: trivial, group_z<n>, "
        "z2_triangular, sweedler_h4, semion")


def default_entries() -> list[CatalogEntry]:
    """The standard five-entry catalog used by the test suites."""
    return [builtin(n) for n in
            ("trivial", "group_z3", "z2_triangular", "sweedler_h4", "semion")]


def quasitriangular_entries() -> list[CatalogEntry]:
    return [e for e in default_entries()
            if isinstance(e.structure, QuasiTriangularQHA)]


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _group_algebra(n: int, field) -> Algebra:
    mult = {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)}
    names = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    if n == 1:
        names = ["1"]
    return Algebra(field, n, mult, basis=names)


def _group_hopf(n: int, field):
    alg = _group_algebra(n, field)
    delta = LinearMap(alg, [tensor_of(alg.basis_element(k), alg.basis_element(k))
                            for k in range(n)])
    counit = LinearMap.scalar_map(alg, [1] * n)
    s = LinearMap(alg, [alg.basis_element((n - k) % n).to_tensor() for k in range(n)],
                  anti=True)
    qba = QuasiBialgebra(alg, delta, counit, alg.tensor_unit(3), alg.tensor_unit(3))
    anti = QuasiAntipode(s, alg.unit_element, alg.unit_element, s_inv=s)
    return QuasiHopf(qba, anti)


def _trivial() -> CatalogEntry:
    h = _group_hopf(1, RATIONAL)
    alg = h.algebra
    qt = QuasiTriangularQHA(h, alg.tensor_unit(2), alg.tensor_unit(2))
    return CatalogEntry("trivial", qt,
                        "one-dimensional structure; every derived operator equals 1")


def _group_zn(n: int) -> CatalogEntry:
    h = _group_hopf(n, RATIONAL)
    return CatalogEntry(f"group_z{n}", h,
                        f"group algebra of Z/{n}: grouplike coproduct, trivial coassociator")


def _z2_triangular() -> CatalogEntry:
    h = _group_hopf(2, RATIONAL)
    alg = h.algebra
    half = Fraction(1, 2)
    one, g = alg.unit_element, alg.basis_element(1)
    r = (tensor_of(one, one) + tensor_of(one, g) + tensor_of(g, one)
         - tensor_of(g, g)).scale(half)
    qt = QuasiTriangularQHA(h, r)
    entry = CatalogEntry("z2_triangular", qt,
                         "k[Z/2] with the nontrivial triangular R-matrix")
    entry.dynamical = _z2_dynamical(qt)
    return entry


def _sweedler_h4() -> CatalogEntry:
    """Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx; S has order 4."""
    field = RATIONAL
    # basis 1, g, x, gx
    mult = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    alg = Algebra(field, 4, mult, basis=["1", "g", "x", "gx"])
    one, g, x, gx = (alg.basis_element(i) for i in range(4))
    delta = LinearMap(alg, [
        tensor_of(one, one),
        tensor_of(g, g),
        tensor_of(x, one) + tensor_of(g, x),
        tensor_of(gx, g) + tensor_of(one, gx),
    ])
    counit = LinearMap.scalar_map(alg, [1, 1, 0, 0])
    s = LinearMap(alg, [one.to_tensor(), g.to_tensor(), (-gx).to_tensor(), x.to_tensor()],
                  anti=True)
    qba = QuasiBialgebra(alg, delta, counit, alg.tensor_unit(3), alg.tensor_unit(3))
    anti = QuasiAntipode(s, one, one)
    h = QuasiHopf(qba, anti)

    # the standard one-parameter R-matrix family, frozen at parameter 1
    lam = Fraction(1)
    half = Fraction(1, 2)
    r0 = (tensor_of(one, one) + tensor_of(one, g) + tensor_of(g, one)
          - tensor_of(g, g)).scale(half)
    r1 = (tensor_of(x, x) - tensor_of(x, gx) + tensor_of(gx, x)
          + tensor_of(gx, gx)).scale(half * lam)
    qt = QuasiTriangularQHA(h, r0 + r1)
    return CatalogEntry("sweedler_h4", qt,
                        "four-dimensional structure with S^2 != id and its standard "
                        "R-matrix at parameter 1")


def _semion() -> CatalogEntry:
    """k[Z/2] over Q(zeta_4) with coassociator 1 - 2 p(x)p(x)p, p = (1-g)/2."""
    field = cyclotomic_field(4)
    alg = Algebra(field, 2,
                  {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}},
                  basis=["1", "g"])
    one, g = alg.unit_element, alg.basis_element(1)
    half = Fraction(1, 2)
    p = half * one - half * g
    delta = LinearMap(alg, [tensor_of(one, one), tensor_of(g, g)])
    counit = LinearMap.scalar_map(alg, [1, 1])
    s = LinearMap.identity(alg)
    s = LinearMap(alg, s.columns, anti=True)
    phi = alg.tensor_unit(3) - tensor_of(p, p, p).scale(2)
    qba = QuasiBialgebra(alg, delta, counit, phi, phi)
    anti = QuasiAntipode(s, g, one, s_inv=s)
    h = QuasiHopf(qba, anti)
    r = alg.tensor_unit(2) + tensor_of(p, p).scale(field.zeta - 1)
    qt = QuasiTriangularQHA(h, r)
    return CatalogEntry("semion", qt,
                        "genuinely quasi: nontrivial coassociator with Phi^2 = 1 and "
                        "an R-matrix entry at a primitive fourth root of unity")


def _z2_dynamical(qt: QuasiTriangularQHA):
    """A one-parameter twist family on k[Z/2] solving the shifted cocycle condition.

    The shift acts through the idempotents (1+g)/2, (1-g)/2 with weights
    (0, 1); solving the resulting scalar functional equation over a
    half-integer grid forces the free coefficient to be 1-periodic, so a
    nonconstant solution alternates between the integer and half-integer
    classes of the grid.
    """
    from .dynamical import DynamicalTwist, ShiftSystem
    from .twists import Twist

    alg = qt.algebra
    one, g = alg.unit_element, alg.basis_element(1)
    half = Fraction(1, 2)
    p0 = half * one + half * g
    p1 = half * one - half * g
    shift = ShiftSystem([p0, p1], [Fraction(0), Fraction(1)])
    domain = [Fraction(k, 2) for k in range(0, 5)]  # 0, 1/2, 1, 3/2, 2

    def twist_at(lam: Fraction) -> Twist:
        # coefficient on p (x) p: 2 on the integer class, 3/4 on the half-integer class
        t = Fraction(2) if lam.denominator == 1 else Fraction(3, 4)
        f = alg.tensor_unit(2) + tensor_of(p1, p1).scale(t - 1)
        f_inv = alg.tensor_unit(2) + tensor_of(p1, p1).scale(1 / t - 1)
        return Twist(f, qt.counit, f_inv)

    return DynamicalTwist(domain, {lam: twist_at(lam) for lam in domain}, shift)
