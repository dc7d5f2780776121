"""Quasi-bialgebra / quasi-Hopf / quasi-triangular structure bundles.

Every bundle is verified against its defining identities at construction
(unless explicitly deferred with ``verify=False``), and the verifiers
return structured reports that localize a failing identity to a basis
element or multi-index rather than throwing.
"""

from __future__ import annotations

from .errors import SingularError, StructureError
from .report import Report
from .tensor import LinearMap, TensorElement, contract_element

__all__ = [
    "QuasiBialgebra", "QuasiAntipode", "QuasiHopf", "QuasiTriangularQHA",
    "verify_qba", "verify_quasi_antipode", "verify_rmatrix",
    "opposite_structure", "primed_structure", "zero_structure", "check_qqybe",
]


class QuasiBialgebra:
    """(H, coproduct, counit, coassociator) with the coassociator inverse cached."""

    def __init__(self, algebra, coproduct, counit, phi, phi_inv=None, verify=True):
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = counit
        self.phi = phi
        if phi_inv is None:
            try:
                phi_inv = phi.invert()
            except SingularError as exc:
                report = Report("qba")
                report.add("phi-invertible", False, str(exc))
                raise StructureError("coassociator is not invertible", report) from exc
        self.phi_inv = phi_inv
        self._coproduct_t = None
        self.verified = False
        if verify:
            report = verify_qba(self)
            if not report.ok:
                raise StructureError(
                    f"quasi-bialgebra axioms fail: {', '.join(report.failure_ids())}", report)
            self.verified = True

    @property
    def coproduct_t(self) -> LinearMap:
        if self._coproduct_t is None:
            self._coproduct_t = self.coproduct.swapped()
        return self._coproduct_t

    def delta(self, x) -> TensorElement:
        return self.coproduct(x)

    def eps(self, x):
        return self.counit(x)

    def qba(self):
        return self


class QuasiAntipode:
    """A triple (S, alpha, beta) with the inverse of S cached."""

    def __init__(self, s, alpha, beta, s_inv=None):
        self.s = s
        self.s_inv = s_inv if s_inv is not None else s.inverse()
        self.alpha = alpha
        self.beta = beta

    def conjugated(self, w) -> "QuasiAntipode":
        """The equivalent triple (w S(.) w^{-1}, w alpha, beta w^{-1})."""
        alg = self.s.algebra
        w_inv = w.inverse()
        cols = [(w * self.s.col_element(i) * w_inv).to_tensor() for i in range(alg.dim)]
        s_new = LinearMap(alg, cols, anti=True)
        s_new_inv_cols = [self.s_inv(w_inv * alg.basis_element(i) * w).to_tensor()
                          for i in range(alg.dim)]
        s_new_inv = LinearMap(alg, s_new_inv_cols, anti=True)
        return QuasiAntipode(s_new, w * self.alpha, self.beta * w_inv, s_inv=s_new_inv)


class QuasiHopf:
    """A quasi-bialgebra together with a quasi-antipode."""

    def __init__(self, qba, antipode, verify=True):
        self._qba = qba
        self.antipode = antipode
        self.verified = False
        if verify:
            report = verify_quasi_antipode(self)
            if not report.ok:
                raise StructureError(
                    f"quasi-antipode axioms fail: {', '.join(report.failure_ids())}", report)
            self.verified = qba.verified

    def qba(self):
        return self._qba

    # delegate the bialgebra surface
    @property
    def algebra(self):
        return self._qba.algebra

    @property
    def coproduct(self):
        return self._qba.coproduct

    @property
    def coproduct_t(self):
        return self._qba.coproduct_t

    @property
    def counit(self):
        return self._qba.counit

    @property
    def phi(self):
        return self._qba.phi

    @property
    def phi_inv(self):
        return self._qba.phi_inv

    def delta(self, x):
        return self._qba.delta(x)

    def eps(self, x):
        return self._qba.eps(x)

    @property
    def s(self):
        return self.antipode.s

    @property
    def s_inv(self):
        return self.antipode.s_inv

    @property
    def alpha(self):
        return self.antipode.alpha

    @property
    def beta(self):
        return self.antipode.beta


class QuasiTriangularQHA:
    """A quasi-Hopf algebra with an R-matrix (inverse cached)."""

    def __init__(self, qha, r, r_inv=None, verify=True):
        self.qha = qha
        self.r = r
        if r_inv is None:
            try:
                r_inv = r.invert()
            except SingularError as exc:
                report = Report("rmatrix")
                report.add("R-invertible", False, str(exc))
                raise StructureError("R-matrix is not invertible", report) from exc
        self.r_inv = r_inv
        self.verified = False
        if verify:
            report = verify_rmatrix(self)
            if not report.ok:
                raise StructureError(
                    f"R-matrix axioms fail: {', '.join(report.failure_ids())}", report)
            self.verified = qha.verified

    def qba(self):
        return self.qha.qba()

    @property
    def algebra(self):
        return self.qha.algebra

    @property
    def coproduct(self):
        return self.qha.coproduct

    @property
    def coproduct_t(self):
        return self.qha.coproduct_t

    @property
    def counit(self):
        return self.qha.counit

    @property
    def phi(self):
        return self.qha.phi

    @property
    def phi_inv(self):
        return self.qha.phi_inv

    def delta(self, x):
        return self.qha.delta(x)

    def eps(self, x):
        return self.qha.eps(x)

    @property
    def antipode(self):
        return self.qha.antipode

    @property
    def s(self):
        return self.qha.s

    @property
    def s_inv(self):
        return self.qha.s_inv

    @property
    def alpha(self):
        return self.qha.alpha

    @property
    def beta(self):
        return self.qha.beta


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def verify_qba(q) -> Report:
    """Check the quasi-bialgebra axioms, each as an exact tensor equality."""
    alg = q.algebra
    rep = Report("qba")
    unit1 = alg.tensor_unit(1)
    unit2 = alg.tensor_unit(2)
    delta, eps, phi, phi_inv = q.coproduct, q.counit, q.phi, q.phi_inv

    rep.add_equal("delta-unital", delta(alg.unit_element), unit2)
    one = alg.field.one
    rep.add("eps-unital", eps(alg.unit_element) == one,
            f"eps(1) = {eps(alg.unit_element)}")

    ok, witness = True, None
    for i in range(alg.dim):
        for j in range(alg.dim):
            ei, ej = alg.basis_element(i), alg.basis_element(j)
            if delta(ei * ej) != delta(ei) * delta(ej):
                ok, witness = False, f"pair ({alg.basis_names[i]}, {alg.basis_names[j]})"
                break
        if not ok:
            break
    rep.add("delta-hom", ok, witness)

    ok, witness = True, None
    for i in range(alg.dim):
        for j in range(alg.dim):
            ei, ej = alg.basis_element(i), alg.basis_element(j)
            if eps(ei * ej) != eps(ei) * eps(ej):
                ok, witness = False, f"pair ({alg.basis_names[i]}, {alg.basis_names[j]})"
                break
        if not ok:
            break
    rep.add("eps-hom", ok, witness)

    ok, witness = True, None
    for i in range(alg.dim):
        d = delta(alg.basis_element(i))
        if eps.on_leg(d, 1).as_element() != alg.basis_element(i) or \
           eps.on_leg(d, 2).as_element() != alg.basis_element(i):
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("counit", ok, witness)

    rep.add("phi-invertible",
            phi * phi_inv == alg.tensor_unit(3) and phi_inv * phi == alg.tensor_unit(3),
            "product with cached inverse is not the unit")

    ok, witness = True, None
    for i in range(alg.dim):
        d = delta(alg.basis_element(i))
        lhs = delta.on_leg(d, 2)
        rhs = phi_inv * delta.on_leg(d, 1) * phi
        if lhs != rhs:
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("qco", ok, witness)

    pent_lhs = delta.on_leg(phi, 1) * delta.on_leg(phi, 3)
    pent_rhs = phi.embed((1, 2, 3), 4) * delta.on_leg(phi, 2) * phi.embed((2, 3, 4), 4)
    rep.add_equal("pentagon", pent_lhs, pent_rhs)

    rep.add_equal("epsphi", eps.on_leg(phi, 2), unit2)
    rep.add("epsphi-derived",
            eps.on_leg(phi, 1) == unit2 and eps.on_leg(phi, 3) == unit2,
            "outer-leg counit of the coassociator is not the unit")
    return rep


def verify_quasi_antipode(h: QuasiHopf) -> Report:
    """Check the quasi-antipode triple against its quasi-bialgebra."""
    alg = h.algebra
    rep = Report("antipode")
    s, s_inv, alpha, beta = h.s, h.s_inv, h.alpha, h.beta
    eps, phi, phi_inv = h.counit, h.phi, h.phi_inv
    one = alg.unit_element

    rep.add_equal("S-unital", s(one), one)
    ok, witness = True, None
    for i in range(alg.dim):
        for j in range(alg.dim):
            ei, ej = alg.basis_element(i), alg.basis_element(j)
            if s(ei * ej) != s(ej) * s(ei):
                ok, witness = False, f"pair ({alg.basis_names[i]}, {alg.basis_names[j]})"
                break
        if not ok:
            break
    rep.add("S-antihom", ok, witness)

    ok, witness = True, None
    for i in range(alg.dim):
        e = alg.basis_element(i)
        if s_inv(s(e)) != e or s(s_inv(e)) != e:
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("S-inverse", ok, witness)

    zig = contract_element(phi, [(1, s), alpha, (2, None), beta, (3, s)])
    rep.add_equal("Sphi", zig, one)
    zag = contract_element(phi_inv, [(1, None), beta, (2, s), alpha, (3, None)])
    rep.add_equal("Sphi-inv", zag, one)

    ok, witness = True, None
    for i in range(alg.dim):
        e = alg.basis_element(i)
        d = h.delta(e)
        left = contract_element(d, [(1, s), alpha, (2, None)])
        if left != eps(e) * alpha:
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("Sab-alpha", ok, witness)

    ok, witness = True, None
    for i in range(alg.dim):
        e = alg.basis_element(i)
        d = h.delta(e)
        right = contract_element(d, [(1, None), beta, (2, s)])
        if right != eps(e) * beta:
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("Sab-beta", ok, witness)

    rep.add("eps-alpha-beta", eps(alpha) * eps(beta) == alg.field.one,
            f"eps(alpha)*eps(beta) = {eps(alpha) * eps(beta)}")

    ok, witness = True, None
    for i in range(alg.dim):
        e = alg.basis_element(i)
        if eps(s(e)) != eps(e) or eps(s_inv(e)) != eps(e):
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("eps-S", ok, witness)
    return rep


def verify_rmatrix(t: QuasiTriangularQHA) -> Report:
    """Check quasi-triangularity of the R-matrix, plus its twist credentials."""
    alg = t.algebra
    rep = Report("rmatrix")
    r, r_inv = t.r, t.r_inv
    phi, phi_inv = t.phi, t.phi_inv
    delta, eps = t.coproduct, t.counit
    unit2 = alg.tensor_unit(2)

    rep.add("R-invertible", r * r_inv == unit2 and r_inv * r == unit2,
            "product with cached inverse is not the unit")

    ok, witness = True, None
    for i in range(alg.dim):
        e = alg.basis_element(i)
        if t.coproduct_t(e) * r != r * delta(e):
            ok, witness = False, f"basis element {alg.basis_names[i]}"
            break
    rep.add("E14.i", ok, witness)

    lhs = delta.on_leg(r, 1)
    rhs = (phi_inv.perm((2, 3, 1)) * r.embed((1, 3), 3) * phi.perm((1, 3, 2))
           * r.embed((2, 3), 3) * phi_inv)
    rep.add_equal("E14.ii", lhs, rhs)

    lhs = delta.on_leg(r, 2)
    rhs = (phi.perm((3, 1, 2)) * r.embed((1, 3), 3) * phi_inv.perm((2, 1, 3))
           * r.embed((1, 2), 3) * phi)
    rep.add_equal("E14.iii", lhs, rhs)

    rep.add("R-counit",
            eps.on_leg(r, 1) == alg.tensor_unit(1) and eps.on_leg(r, 2) == alg.tensor_unit(1),
            "counit of R is not 1")
    return rep


# ---------------------------------------------------------------------------
# derived structures
# ---------------------------------------------------------------------------

def opposite_structure(h, verify=True):
    """The opposite structure: coproduct and coassociator reversed, antipode inverted.

    Quasi-triangular input yields the opposite R-matrix as well.
    """
    if isinstance(h, QuasiTriangularQHA):
        base = opposite_structure(h.qha, verify=verify)
        return QuasiTriangularQHA(base, h.r.transpose(), h.r_inv.transpose(), verify=verify)
    qba = h.qba()
    qba_op = QuasiBialgebra(
        qba.algebra, qba.coproduct.swapped(), qba.counit,
        qba.phi_inv.perm((3, 2, 1)), qba.phi.perm((3, 2, 1)), verify=verify)
    anti = QuasiAntipode(h.s_inv, h.s_inv(h.alpha), h.s_inv(h.beta), s_inv=h.s)
    return QuasiHopf(qba_op, anti, verify=verify)


def primed_structure(h, verify=True):
    """The structure carried by the coproduct a -> (S (x) S) Delta^T(S^{-1}(a))."""
    if isinstance(h, QuasiTriangularQHA):
        base = primed_structure(h.qha, verify=verify)
        return QuasiTriangularQHA(base, h.s.map_tensor(h.r), h.s.map_tensor(h.r_inv),
                                  verify=verify)
    qba = h.qba()
    alg = qba.algebra
    s, s_inv = h.s, h.s_inv
    cols = [s.map_tensor(qba.coproduct_t(s_inv(alg.basis_element(i))))
            for i in range(alg.dim)]
    delta_prime = LinearMap(alg, cols)
    phi_prime = s.map_tensor(qba.phi.perm((3, 2, 1)))
    phi_prime_inv = s.map_tensor(qba.phi_inv.perm((3, 2, 1)))
    qba_p = QuasiBialgebra(alg, delta_prime, qba.counit, phi_prime, phi_prime_inv,
                           verify=verify)
    anti = QuasiAntipode(s, s(h.beta), s(h.alpha), s_inv=s_inv)
    return QuasiHopf(qba_p, anti, verify=verify)


def zero_structure(h, verify=True):
    """The mirror of the primed structure built from S^{-1} instead of S."""
    if isinstance(h, QuasiTriangularQHA):
        base = zero_structure(h.qha, verify=verify)
        return QuasiTriangularQHA(base, h.s_inv.map_tensor(h.r), h.s_inv.map_tensor(h.r_inv),
                                  verify=verify)
    qba = h.qba()
    alg = qba.algebra
    s, s_inv = h.s, h.s_inv
    cols = [s_inv.map_tensor(qba.coproduct_t(s(alg.basis_element(i))))
            for i in range(alg.dim)]
    delta_zero = LinearMap(alg, cols)
    phi_zero = s_inv.map_tensor(qba.phi.perm((3, 2, 1)))
    phi_zero_inv = s_inv.map_tensor(qba.phi_inv.perm((3, 2, 1)))
    qba_z = QuasiBialgebra(alg, delta_zero, qba.counit, phi_zero, phi_zero_inv,
                           verify=verify)
    anti = QuasiAntipode(s, s_inv(h.beta), s_inv(h.alpha), s_inv=s_inv)
    return QuasiHopf(qba_z, anti, verify=verify)


def structures_equal(a, b) -> bool:
    """Component-wise equality of two structure bundles of the same kind."""
    if isinstance(a, QuasiTriangularQHA) != isinstance(b, QuasiTriangularQHA):
        return False
    if isinstance(a, QuasiTriangularQHA):
        if a.r != b.r:
            return False
        a, b = a.qha, b.qha
    has_antipode = isinstance(a, QuasiHopf)
    if has_antipode != isinstance(b, QuasiHopf):
        return False
    qa, qb = a.qba(), b.qba()
    if not (qa.coproduct == qb.coproduct and qa.counit == qb.counit
            and qa.phi == qb.phi):
        return False
    if has_antipode:
        if not (a.s == b.s and a.alpha == b.alpha and a.beta == b.beta):
            return False
    return True


def qqybe_sides(t: QuasiTriangularQHA):
    """Both arity-3 products whose equality is the quasi-QYBE."""
    r, phi, phi_inv = t.r, t.phi, t.phi_inv
    r12 = r.embed((1, 2), 3)
    r13 = r.embed((1, 3), 3)
    r23 = r.embed((2, 3), 3)
    lhs = r12 * phi_inv.perm((2, 3, 1)) * r13 * phi.perm((1, 3, 2)) * r23 * phi_inv
    rhs = (phi_inv.perm((3, 2, 1)) * r23 * phi.perm((3, 1, 2)) * r13
           * phi_inv.perm((2, 1, 3)) * r12)
    return lhs, rhs


def check_qqybe(t: QuasiTriangularQHA) -> bool:
    """Exact check of the quasi-QYBE."""
    lhs, rhs = qqybe_sides(t)
    return lhs == rhs
