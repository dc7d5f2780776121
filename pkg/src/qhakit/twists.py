"""Twists, the twisted structure, the quasi-cocycle condition, compatible twists.

A twist is an invertible counital element of H (x) H.  Twisting transports
a whole structure bundle: coproduct by conjugation, coassociator by the
five-factor product, canonical elements by the antipode contractions, and
the R-matrix by F^T R F^{-1}.
"""

from __future__ import annotations

from .errors import SingularError, TwistError
from .structures import (QuasiAntipode, QuasiBialgebra, QuasiHopf,
                         QuasiTriangularQHA)
from .tensor import LinearMap, TensorElement, contract_element, tensor_of

__all__ = [
    "Twist", "twist_structure", "compose_twists", "is_quasi_cocycle",
    "is_compatible", "central_to_compatible", "compatible_to_central",
    "quadratic_invariants",
]


class Twist:
    """An invertible element of H (x) H with (eps (x) 1)F = (1 (x) eps)F = 1.

    The counit property is validated eagerly (every downstream formula
    assumes it) and the inverse is cached.
    """

    def __init__(self, f: TensorElement, counit, f_inv=None, check=True):
        if f.arity != 2:
            raise TwistError("a twist lives in H (x) H")
        self.f = f
        self.counit = counit
        if f_inv is None:
            try:
                f_inv = f.invert()
            except SingularError as exc:
                raise TwistError(f"twist is not invertible: {exc}") from exc
        self.f_inv = f_inv
        if check:
            self._validate()

    def _validate(self):
        alg = self.f.algebra
        unit1 = alg.tensor_unit(1)
        unit2 = alg.tensor_unit(2)
        if self.f * self.f_inv != unit2 or self.f_inv * self.f != unit2:
            raise TwistError("cached inverse is not a two-sided inverse")
        if self.counit.on_leg(self.f, 1) != unit1 or self.counit.on_leg(self.f, 2) != unit1:
            raise TwistError("counit property fails: (eps (x) 1)F and (1 (x) eps)F must be 1")

    @classmethod
    def identity(cls, q) -> "Twist":
        alg = q.algebra
        unit2 = alg.tensor_unit(2)
        return cls(unit2, q.counit, unit2, check=False)

    @property
    def algebra(self):
        return self.f.algebra

    def inverse(self) -> "Twist":
        return Twist(self.f_inv, self.counit, self.f, check=False)

    def transpose(self) -> "Twist":
        return Twist(self.f.transpose(), self.counit, self.f_inv.transpose(), check=False)

    def power(self, m: int) -> "Twist":
        if m < 0:
            return self.inverse().power(-m)
        out = Twist.identity_like(self)
        for _ in range(m):
            out = compose_twists(out, self)
        return out

    @classmethod
    def identity_like(cls, twist: "Twist") -> "Twist":
        unit2 = twist.algebra.tensor_unit(2)
        return cls(unit2, twist.counit, unit2, check=False)

    def __eq__(self, other):
        if not isinstance(other, Twist):
            return NotImplemented
        return self.f == other.f

    def __repr__(self):
        return f"Twist({self.f!r})"


def compose_twists(f: Twist, g: Twist) -> Twist:
    """The product twist FG; twisting by it equals twisting by G then by F."""
    return Twist(f.f * g.f, f.counit, g.f_inv * f.f_inv, check=False)


def twisted_coassociator(q, f: TensorElement, f_inv: TensorElement) -> TensorElement:
    """(F (x) 1) (Delta (x) 1)F  Phi  (1 (x) Delta)F^{-1} (1 (x) F^{-1})."""
    delta = q.coproduct
    return (f.embed((1, 2), 3) * delta.on_leg(f, 1) * q.phi
            * delta.on_leg(f_inv, 2) * f_inv.embed((2, 3), 3))


def twisted_coassociator_inv(q, f: TensorElement, f_inv: TensorElement) -> TensorElement:
    return (f.embed((2, 3), 3) * q.coproduct.on_leg(f, 2) * q.phi_inv
            * q.coproduct.on_leg(f_inv, 1) * f_inv.embed((1, 2), 3))


def twisted_alpha(h, f: Twist):
    """alpha_F = sum S(fbar_i) alpha fbar^i over the inverse twist."""
    return contract_element(f.f_inv, [(1, h.s), h.alpha, (2, None)])


def twisted_beta(h, f: Twist):
    """beta_F = sum f_i beta S(f^i)."""
    return contract_element(f.f, [(1, None), h.beta, (2, h.s)])


def twist_structure(h, f: Twist, verify=True):
    """Transport a structure bundle along a twist; returns the same kind.

    The output keeps the counit and the antipode map; only the coproduct,
    coassociator, canonical elements, and R-matrix move.
    """
    if isinstance(h, QuasiTriangularQHA):
        base = twist_structure(h.qha, f, verify=verify)
        r_f = f.f.transpose() * h.r * f.f_inv
        r_f_inv = f.f * h.r_inv * f.f_inv.transpose()
        return QuasiTriangularQHA(base, r_f, r_f_inv, verify=verify)

    q = h.qba()
    alg = q.algebra
    cols = [f.f * q.coproduct.col(i) * f.f_inv for i in range(alg.dim)]
    delta_f = LinearMap(alg, cols)
    phi_f = twisted_coassociator(q, f.f, f.f_inv)
    phi_f_inv = twisted_coassociator_inv(q, f.f, f.f_inv)
    qba_f = QuasiBialgebra(alg, delta_f, q.counit, phi_f, phi_f_inv, verify=verify)
    if isinstance(h, QuasiBialgebra):
        return qba_f
    anti = QuasiAntipode(h.s, twisted_alpha(h, f), twisted_beta(h, f), s_inv=h.s_inv)
    return QuasiHopf(qba_f, anti, verify=verify)


def quasi_cocycle_sides(f: Twist, q):
    delta = q.coproduct
    lhs = f.f.embed((1, 2), 3) * delta.on_leg(f.f, 1) * q.phi
    rhs = q.phi * f.f.embed((2, 3), 3) * delta.on_leg(f.f, 2)
    return lhs, rhs


def is_quasi_cocycle(f: Twist, q) -> bool:
    """(F (x) 1)(Delta (x) 1)F Phi  ==  Phi (1 (x) F)(1 (x) Delta)F, exactly."""
    lhs, rhs = quasi_cocycle_sides(f, q)
    return lhs == rhs


def commutes_with_coproduct(f: TensorElement, q) -> bool:
    alg = q.algebra
    return all(f * q.coproduct.col(i) == q.coproduct.col(i) * f
               for i in range(alg.dim))


def is_compatible(c: Twist, q) -> bool:
    """A compatible twist commutes with the coproduct and is a quasi-cocycle."""
    return commutes_with_coproduct(c.f, q) and is_quasi_cocycle(c, q)


def central_to_compatible(z, q) -> Twist:
    """eps(z)^{-1} (z (x) z) Delta(z^{-1}) for invertible central z."""
    if not z.is_central():
        raise TwistError("element is not central")
    z_inv = z.inverse()
    eps_z = q.counit(z)
    if not eps_z:
        raise TwistError("element has counit zero")
    scale = q.algebra.field.inv(eps_z)
    c = (tensor_of(z, z) * q.coproduct(z_inv)).scale(scale)
    c_inv = (q.coproduct(z) * tensor_of(z_inv, z_inv)).scale(eps_z)
    return Twist(c, q.counit, c_inv)


def compatible_to_central(c: Twist, h):
    """The unique invertible central z with z alpha = alpha_C and beta_C z = beta.

    Both closed forms of z and of z^{-1} are evaluated and compared, and
    every defining relation is asserted; any mismatch raises.
    """
    q = h.qba()
    if not is_compatible(c, q):
        raise TwistError("twist is not compatible")
    s = h.s
    alpha_c = twisted_alpha(h, c)
    beta_c = twisted_beta(h, c)
    z = contract_element(h.phi, [(1, s), alpha_c, (2, None), h.beta, (3, s)])
    z_alt = contract_element(h.phi_inv, [(1, None), h.beta, (2, s), alpha_c, (3, None)])
    if z != z_alt:
        raise TwistError("the two closed forms of the central element disagree")
    z_inv = contract_element(h.phi, [(1, s), h.alpha, (2, None), beta_c, (3, s)])
    z_inv_alt = contract_element(h.phi_inv, [(1, None), beta_c, (2, s), h.alpha, (3, None)])
    if z_inv != z_inv_alt:
        raise TwistError("the two closed forms of the inverse disagree")
    one = h.algebra.unit_element
    if z * z_inv != one or z_inv * z != one:
        raise TwistError("closed-form inverse is not a two-sided inverse")
    if z_inv != z.inverse():
        raise TwistError("closed-form inverse disagrees with linear-solve inverse")
    if not z.is_central():
        raise TwistError("central element formula produced a non-central element")
    if z * h.alpha != alpha_c or beta_c * z != h.beta:
        raise TwistError("defining relations of the central element fail")
    return z


def quadratic_invariants(t, m: int):
    """Central invariant of the compatible twist (R^T R)^m, any integer m."""
    rtr = t.r.transpose() * t.r
    rtr_inv = t.r_inv * t.r_inv.transpose()
    base = Twist(rtr, t.counit, rtr_inv)
    return compatible_to_central(base.power(m), t.qha)
