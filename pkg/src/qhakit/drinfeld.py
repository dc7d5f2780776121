"""The coproduct-conjugating twist machinery: gamma, gamma-bar, F_delta, F_0.

The twist F_delta conjugates the coproduct into a -> (S (x) S) Delta^T(S^{-1}(a))
and transports the coassociator onto its reversed antipode image; F_0 does
the same with S^{-1} in place of S.  Every operation here evaluates its
result along two independent routes (the two expansion choices, or a
closed form against a from-scratch recomputation) and raises
ConsistencyError on any disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .structures import QuasiHopf, opposite_structure
from .tensor import LinearMap, TensorElement, contract
from .twists import (Twist, twist_structure, twisted_alpha, twisted_beta,
                     twisted_coassociator)

__all__ = [
    "DrinfeldData", "compute_gamma", "compute_gamma_bar", "compute_drinfeld_twist",
    "compute_second_drinfeld", "opposite_drinfeld", "gamma_bar_under_twist",
    "drinfeld_under_twist",
]


@dataclass
class DrinfeldData:
    gamma: TensorElement
    gamma_bar: TensorElement
    f_delta: Twist
    f_zero: Twist


def _sdt_map(h) -> LinearMap:
    """a -> (S (x) S) Delta^T(a), materialized on the basis."""
    alg = h.algebra
    cols = [h.s.map_tensor(h.coproduct_t.col(i)) for i in range(alg.dim)]
    return LinearMap(alg, cols)


def _delta_prime_map(h) -> LinearMap:
    alg = h.algebra
    cols = [h.s.map_tensor(h.coproduct_t(h.s_inv(alg.basis_element(i))))
            for i in range(alg.dim)]
    return LinearMap(alg, cols)


def _delta_zero_map(h) -> LinearMap:
    alg = h.algebra
    cols = [h.s_inv.map_tensor(h.coproduct_t(h.s(alg.basis_element(i))))
            for i in range(alg.dim)]
    return LinearMap(alg, cols)


def compute_gamma(h: QuasiHopf) -> TensorElement:
    """gamma = sum S(B)alpha C (x) S(A)alpha D over either four-leg expansion.

    The two expansion choices of A (x) B (x) C (x) D must give the same
    gamma, and gamma intertwines the (S (x) S)Delta^T and Delta images of
    the coproduct on every basis element.
    """
    delta = h.coproduct
    w1 = h.phi_inv.embed((1, 2, 3), 4) * delta.on_leg(h.phi, 1)
    w2 = h.phi.embed((2, 3, 4), 4) * delta.on_leg(h.phi_inv, 3)
    spec = ([(2, h.s), h.alpha, (3, None)], [(1, h.s), h.alpha, (4, None)])
    gamma = contract(w1, *spec)
    gamma_alt = contract(w2, *spec)
    if gamma != gamma_alt:
        raise ConsistencyError("the two expansion choices of gamma disagree")

    sdt = _sdt_map(h)
    alg = h.algebra
    for i in range(alg.dim):
        d = delta(alg.basis_element(i))
        acc = alg.tensor_zero(2)
        for (a1, a2), c in d.entries.items():
            acc = acc + (sdt.col(a1) * gamma * delta.col(a2)).scale(c)
        if acc != gamma.scale(h.eps(alg.basis_element(i))):
            raise ConsistencyError(
                f"gamma intertwining fails on basis element {alg.basis_names[i]}")
    return gamma


def compute_gamma_bar(h: QuasiHopf) -> TensorElement:
    """gamma-bar = sum A beta S(D) (x) B beta S(C), with the mirrored checks."""
    delta = h.coproduct
    w1 = delta.on_leg(h.phi_inv, 1) * h.phi.embed((1, 2, 3), 4)
    w2 = delta.on_leg(h.phi, 3) * h.phi_inv.embed((2, 3, 4), 4)
    spec = ([(1, None), h.beta, (4, h.s)], [(2, None), h.beta, (3, h.s)])
    gb = contract(w1, *spec)
    gb_alt = contract(w2, *spec)
    if gb != gb_alt:
        raise ConsistencyError("the two expansion choices of gamma-bar disagree")

    sdt = _sdt_map(h)
    alg = h.algebra
    for i in range(alg.dim):
        d = delta(alg.basis_element(i))
        acc = alg.tensor_zero(2)
        for (a1, a2), c in d.entries.items():
            acc = acc + (delta.col(a1) * gb * sdt.col(a2)).scale(c)
        if acc != gb.scale(h.eps(alg.basis_element(i))):
            raise ConsistencyError(
                f"gamma-bar intertwining fails on basis element {alg.basis_names[i]}")
    return gb


def compute_drinfeld_twist(h: QuasiHopf, _gamma=None, _gamma_bar=None) -> Twist:
    """F_delta, from both closed forms, with its full postcondition battery.

    Asserted: both forms of F_delta and of its inverse agree; F_delta
    conjugates the coproduct onto the primed coproduct; the coassociator
    twists onto the primed coassociator; F_delta Delta(alpha) = gamma and
    Delta(beta) F_delta^{-1} = gamma-bar; the twisted canonical elements
    are (S(beta), S(alpha)).
    """
    alg = h.algebra
    delta = h.coproduct
    s = h.s
    gamma = _gamma if _gamma is not None else compute_gamma(h)
    gamma_bar = _gamma_bar if _gamma_bar is not None else compute_gamma_bar(h)
    sdt = _sdt_map(h)
    dprime = _delta_prime_map(h)

    f = alg.tensor_zero(2)
    for (i1, i2, i3), c in h.phi.entries.items():
        tail = alg.basis_element(i2) * h.beta * s.col_element(i3)
        f = f + (sdt.col(i1) * gamma * delta(tail)).scale(c)
    f_alt = alg.tensor_zero(2)
    for (i1, i2, i3), c in h.phi_inv.entries.items():
        head = alg.basis_element(i1) * h.beta * s.col_element(i2)
        f_alt = f_alt + (dprime(head) * gamma * delta.col(i3)).scale(c)
    if f != f_alt:
        raise ConsistencyError("the two closed forms of the Drinfeld twist disagree")

    f_inv = alg.tensor_zero(2)
    for (i1, i2, i3), c in h.phi_inv.entries.items():
        tail = s.col_element(i2) * h.alpha * alg.basis_element(i3)
        f_inv = f_inv + (delta.col(i1) * gamma_bar * dprime(tail)).scale(c)
    f_inv_alt = alg.tensor_zero(2)
    for (i1, i2, i3), c in h.phi.entries.items():
        head = s.col_element(i1) * h.alpha * alg.basis_element(i2)
        f_inv_alt = f_inv_alt + (delta(head) * gamma_bar * sdt.col(i3)).scale(c)
    if f_inv != f_inv_alt:
        raise ConsistencyError("the two closed forms of the inverse Drinfeld twist disagree")

    twist = Twist(f, h.counit, f_inv)

    for i in range(alg.dim):
        if dprime.col(i) != f * delta.col(i) * f_inv:
            raise ConsistencyError(
                "F_delta does not conjugate the coproduct onto the primed coproduct "
                f"at basis element {alg.basis_names[i]}")
    phi_prime = s.map_tensor(h.phi.perm((3, 2, 1)))
    if twisted_coassociator(h.qba(), f, f_inv) != phi_prime:
        raise ConsistencyError("the coassociator does not twist onto its primed form")
    if f * delta(h.alpha) != gamma:
        raise ConsistencyError("F_delta Delta(alpha) != gamma")
    if delta(h.beta) * f_inv != gamma_bar:
        raise ConsistencyError("Delta(beta) F_delta^{-1} != gamma-bar")
    if twisted_alpha(h, twist) != s(h.beta) or twisted_beta(h, twist) != s(h.alpha):
        raise ConsistencyError("twisted canonical elements are not (S(beta), S(alpha))")
    return twist


def compute_second_drinfeld(h: QuasiHopf, _f_delta=None) -> Twist:
    """F_0 = (S^{-1} (x) S^{-1}) F_delta^T, checked against the zero structure."""
    f_delta = _f_delta if _f_delta is not None else compute_drinfeld_twist(h)
    s_inv = h.s_inv
    f0 = s_inv.map_tensor(f_delta.f.transpose())
    f0_inv = s_inv.map_tensor(f_delta.f_inv.transpose())
    twist = Twist(f0, h.counit, f0_inv)

    alg = h.algebra
    dzero = _delta_zero_map(h)
    for i in range(alg.dim):
        if dzero.col(i) != f0 * h.coproduct.col(i) * f0_inv:
            raise ConsistencyError(
                "F_0 does not conjugate the coproduct onto the zero coproduct "
                f"at basis element {alg.basis_names[i]}")
    phi_zero = s_inv.map_tensor(h.phi.perm((3, 2, 1)))
    if twisted_coassociator(h.qba(), f0, f0_inv) != phi_zero:
        raise ConsistencyError("the coassociator does not twist onto its zero form")
    if twisted_alpha(h, twist) != s_inv(h.beta) or twisted_beta(h, twist) != s_inv(h.alpha):
        raise ConsistencyError(
            "twisted canonical elements are not (S^{-1}(beta), S^{-1}(alpha))")
    return twist


def opposite_drinfeld(h: QuasiHopf, _f_delta=None) -> Twist:
    """The Drinfeld twist of the opposite structure, by two independent routes.

    Route (a) runs the closed-form computation on the opposite structure;
    route (b) applies S^{-1} legwise to F_delta.  Both must agree, and
    both must equal the transpose of F_0; the second Drinfeld twist of the
    opposite structure must likewise be F_delta^T.
    """
    f_delta = _f_delta if _f_delta is not None else compute_drinfeld_twist(h)
    h_op = opposite_structure(h)
    via_opposite = compute_drinfeld_twist(h_op)
    closed = h.s_inv.map_tensor(f_delta.f)
    if via_opposite.f != closed:
        raise ConsistencyError(
            "opposite-structure Drinfeld twist disagrees with (S^{-1} (x) S^{-1})F_delta")
    f0 = compute_second_drinfeld(h, _f_delta=f_delta)
    if via_opposite.f != f0.f.transpose():
        raise ConsistencyError("opposite-structure Drinfeld twist is not F_0^T")
    second_op = compute_second_drinfeld(h_op, _f_delta=via_opposite)
    if second_op.f != f_delta.f.transpose():
        raise ConsistencyError(
            "second Drinfeld twist of the opposite structure is not F_delta^T")
    return via_opposite


def gamma_bar_under_twist(h: QuasiHopf, g: Twist, _gamma_bar=None,
                          _twisted=None) -> TensorElement:
    """gamma-bar of the twisted structure, closed form against recomputation."""
    twisted = _twisted if _twisted is not None else twist_structure(h, g)
    recomputed = compute_gamma_bar(twisted)

    gamma_bar = _gamma_bar if _gamma_bar is not None else compute_gamma_bar(h)
    alg = h.algebra
    closed = alg.tensor_zero(2)
    gt = g.f.transpose()
    for (i1, i2), c in g.f.entries.items():
        w = gt * h.coproduct_t.col(i2)
        term = g.f * h.coproduct.col(i1) * gamma_bar * h.s.map_tensor(w)
        closed = closed + term.scale(c)
    if recomputed != closed:
        raise ConsistencyError("twisted gamma-bar closed form disagrees with recomputation")
    return closed


def drinfeld_under_twist(h: QuasiHopf, g: Twist, _f_delta=None,
                         _twisted=None) -> Twist:
    """F_delta of the twisted structure, closed form against recomputation.

    Also checks the inverse form and the matching closed form for F_0.
    """
    f_delta = _f_delta if _f_delta is not None else compute_drinfeld_twist(h)
    twisted = _twisted if _twisted is not None else twist_structure(h, g)
    recomputed = compute_drinfeld_twist(twisted)

    s, s_inv = h.s, h.s_inv
    closed = s.map_tensor(g.f_inv.transpose()) * f_delta.f * g.f_inv
    if recomputed.f != closed:
        raise ConsistencyError("twisted Drinfeld twist disagrees with its closed form")
    closed_inv = g.f * f_delta.f_inv * s.map_tensor(g.f.transpose())
    if recomputed.f_inv != closed_inv:
        raise ConsistencyError("twisted inverse Drinfeld twist disagrees with its closed form")

    f0_twisted = compute_second_drinfeld(twisted, _f_delta=recomputed)
    f0 = compute_second_drinfeld(h, _f_delta=f_delta)
    f0_closed = s_inv.map_tensor(g.f_inv.transpose()) * f0.f * g.f_inv
    if f0_twisted.f != f0_closed:
        raise ConsistencyError("twisted second Drinfeld twist disagrees with its closed form")
    return recomputed


def compute_drinfeld_data(h: QuasiHopf) -> DrinfeldData:
    """gamma, gamma-bar, F_delta, F_0 in one pass (shared subcomputations)."""
    gamma = compute_gamma(h)
    gamma_bar = compute_gamma_bar(h)
    f_delta = compute_drinfeld_twist(h, _gamma=gamma, _gamma_bar=gamma_bar)
    f_zero = compute_second_drinfeld(h, _f_delta=f_delta)
    return DrinfeldData(gamma, gamma_bar, f_delta, f_zero)
