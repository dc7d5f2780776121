"""Structure-constant algebras, their tensor powers, and leg operations.

An :class:`Algebra` is a finite-dimensional unital associative algebra
given by sparse structure constants c_{ij}^k (e_i e_j = sum_k c_{ij}^k e_k),
checked for associativity and the unit laws at construction.  Elements of
tensor powers H^(x)n are sparse multi-index coefficient tables with zeros
always dropped, so equality is plain dict equality.

Conventions used throughout:

* legs are numbered from 1;
* ``t.perm((2, 3, 1))`` puts component 2 on leg 1, component 3 on leg 2,
  component 1 on leg 3 (so for a coassociator ``phi.perm((3, 2, 1))`` is
  the familiar 321-reversal);
* ``r.embed((1, 3), 3)`` places an arity-2 element on legs 1 and 3 of
  H^(x)3 with the unit on leg 2.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import AlgebraError, ArityMismatch, SingularError


def _acc(entries, key, value):
    cur = entries.get(key)
    if cur is None:
        if value:
            entries[key] = value
        return
    cur = cur + value
    if cur:
        entries[key] = cur
    else:
        del entries[key]


class Algebra:
    """Finite-dimensional unital associative algebra over an exact field."""

    def __init__(self, field, dim, mult, unit=None, basis=None, check=True):
        if dim < 1:
            raise AlgebraError("dimension must be positive")
        self.field = field
        self.dim = dim
        self.basis_names = list(basis) if basis else [f"e{i}" for i in range(dim)]
        if len(self.basis_names) != dim:
            raise AlgebraError("one basis name per dimension")

        table = {}
        for (i, j), val in mult.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise AlgebraError(f"structure constant index ({i},{j}) out of range")
            if isinstance(val, dict):
                col = {k: field.coerce(v) for k, v in val.items()}
            else:
                col = {k: field.coerce(v) for k, v in enumerate(val)}
            col = {k: v for k, v in col.items() if v}
            for k in col:
                if not 0 <= k < dim:
                    raise AlgebraError(f"structure constant target {k} out of range")
            if col:
                table[(i, j)] = col
        self._mult = table

        if unit is None:
            unit_coeffs = [field.one] + [field.zero] * (dim - 1)
        else:
            unit_coeffs = [field.coerce(v) for v in unit]
            if len(unit_coeffs) != dim:
                raise AlgebraError("unit vector has wrong length")
        self.unit = tuple(unit_coeffs)
        self._tensor_units = {}
        if check:
            self._check()

    # -- construction-time axiom checks --

    def _check(self):
        one = self.unit_element
        for i in range(self.dim):
            e = self.basis_element(i)
            if one * e != e or e * one != e:
                raise AlgebraError(f"unit law fails on basis element {self.basis_names[i]}")
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_element(i) * self.basis_element(j)
                for k in range(self.dim):
                    left = ij * self.basis_element(k)
                    right = self.basis_element(i) * (self.basis_element(j) * self.basis_element(k))
                    if left != right:
                        raise AlgebraError(
                            "associativity fails on basis triple "
                            f"({self.basis_names[i]}, {self.basis_names[j]}, {self.basis_names[k]})")

    # -- basic accessors --

    def basis_product(self, i, j):
        return self._mult.get((i, j), {})

    def element(self, coeffs) -> "AlgElement":
        coeffs = [self.field.coerce(v) for v in coeffs]
        if len(coeffs) != self.dim:
            raise AlgebraError("coefficient vector has wrong length")
        return AlgElement(self, tuple(coeffs))

    def basis_element(self, i) -> "AlgElement":
        coeffs = [self.field.zero] * self.dim
        coeffs[i] = self.field.one
        return AlgElement(self, tuple(coeffs))

    @property
    def unit_element(self) -> "AlgElement":
        return AlgElement(self, self.unit)

    def zero_element(self) -> "AlgElement":
        return AlgElement(self, (self.field.zero,) * self.dim)

    def scalar_element(self, value) -> "AlgElement":
        return self.field.coerce(value) * self.unit_element

    def tensor_unit(self, arity) -> "TensorElement":
        """The unit of H^(x)arity (arity 0 gives the scalar 1)."""
        cached = self._tensor_units.get(arity)
        if cached is not None:
            return cached
        entries = {(): self.field.one}
        support = [(i, v) for i, v in enumerate(self.unit) if v]
        for _ in range(arity):
            nxt = {}
            for key, val in entries.items():
                for i, v in support:
                    _acc(nxt, key + (i,), val * v)
            entries = nxt
        t = TensorElement(self, arity, entries, clean=True)
        self._tensor_units[arity] = t
        return t

    def tensor_zero(self, arity) -> "TensorElement":
        return TensorElement(self, arity, {}, clean=True)

    def multi_indices(self, arity):
        return itertools.product(range(self.dim), repeat=arity)

    def compatible(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, Algebra) and self.field == other.field
                and self.dim == other.dim and self.unit == other.unit
                and self._mult == other._mult)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"


class AlgElement:
    """An element of H as a dense coefficient vector over the basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def _require_same(self, other):
        if not self.algebra.compatible(other.algebra):
            raise ArityMismatch("elements of different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        self._require_same(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        self._require_same(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._require_same(other)
            alg = self.algebra
            out = [alg.field.zero] * alg.dim
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b:
                        continue
                    ab = a * b
                    for k, c in alg.basis_product(i, j).items():
                        out[k] = out[k] + ab * c
            return AlgElement(alg, tuple(out))
        return AlgElement(self.algebra,
                          tuple(a * self.algebra.field.coerce(other) for a in self.coeffs))

    def __rmul__(self, other):
        # scalar * element (scalars commute with everything)
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra.compatible(other.algebra) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_tensor(self) -> "TensorElement":
        entries = {(i,): v for i, v in enumerate(self.coeffs) if v}
        return TensorElement(self.algebra, 1, entries, clean=True)

    def left_matrix(self):
        """Rows/columns indexed by the basis; column j holds self * e_j."""
        alg = self.algebra
        mat = [[alg.field.zero] * alg.dim for _ in range(alg.dim)]
        for j in range(alg.dim):
            col = self * alg.basis_element(j)
            for k, v in enumerate(col.coeffs):
                mat[k][j] = v
        return mat

    def inverse(self) -> "AlgElement":
        return self.to_tensor().invert().as_element()

    def is_invertible(self) -> bool:
        try:
            self.inverse()
            return True
        except SingularError:
            return False

    def is_central(self) -> bool:
        alg = self.algebra
        return all(self * alg.basis_element(i) == alg.basis_element(i) * self
                   for i in range(alg.dim))

    def __repr__(self):
        names = self.algebra.basis_names
        terms = [f"({v})*{names[i]}" for i, v in enumerate(self.coeffs) if v]
        return " + ".join(terms) if terms else "0"


class TensorElement:
    """A sparse element of H^(x)arity: multi-index -> nonzero coefficient."""

    __slots__ = ("algebra", "arity", "entries")

    def __init__(self, algebra, arity, entries=None, clean=False):
        if arity < 0:
            raise ArityMismatch("arity must be nonnegative")
        self.algebra = algebra
        self.arity = arity
        if entries is None:
            entries = {}
        if not clean:
            cleaned = {}
            for key, val in entries.items():
                key = tuple(key)
                if len(key) != arity or not all(0 <= i < algebra.dim for i in key):
                    raise ArityMismatch(f"bad multi-index {key} for arity {arity}")
                val = algebra.field.coerce(val)
                if val:
                    _acc(cleaned, key, val)
            entries = cleaned
        self.entries = entries

    def _require_like(self, other):
        if not self.algebra.compatible(other.algebra):
            raise ArityMismatch("tensors over different algebras")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity mismatch: {self.arity} vs {other.arity}")

    # -- linear structure --

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_like(other)
        out = dict(self.entries)
        for key, val in other.entries.items():
            _acc(out, key, val)
        return TensorElement(self.algebra, self.arity, out, clean=True)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_like(other)
        out = dict(self.entries)
        for key, val in other.entries.items():
            _acc(out, key, -val)
        return TensorElement(self.algebra, self.arity, out, clean=True)

    def __neg__(self):
        return TensorElement(self.algebra, self.arity,
                             {k: -v for k, v in self.entries.items()}, clean=True)

    def scale(self, scalar) -> "TensorElement":
        scalar = self.algebra.field.coerce(scalar)
        if not scalar:
            return self.algebra.tensor_zero(self.arity)
        return TensorElement(self.algebra, self.arity,
                             {k: v * scalar for k, v in self.entries.items()}, clean=True)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    # -- multiplicative structure --

    def __mul__(self, other):
        """Legwise product: (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly."""
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._require_like(other)
        alg = self.algebra
        out = {}
        for I, u in self.entries.items():
            for J, v in other.entries.items():
                partial = {(): u * v}
                for a, b in zip(I, J):
                    prod = alg.basis_product(a, b)
                    if not prod:
                        partial = None
                        break
                    nxt = {}
                    for key, val in partial.items():
                        for k, c in prod.items():
                            _acc(nxt, key + (k,), val * c)
                    partial = nxt
                    if not partial:
                        partial = None
                        break
                if partial:
                    for key, val in partial.items():
                        _acc(out, key, val)
        return TensorElement(alg, self.arity, out, clean=True)

    def __matmul__(self, other):
        """Outer (Kronecker) product: arities add."""
        if isinstance(other, AlgElement):
            other = other.to_tensor()
        if not isinstance(other, TensorElement):
            return NotImplemented
        if not self.algebra.compatible(other.algebra):
            raise ArityMismatch("tensors over different algebras")
        out = {}
        for I, u in self.entries.items():
            for J, v in other.entries.items():
                _acc(out, I + J, u * v)
        return TensorElement(self.algebra, self.arity + other.arity, out, clean=True)

    def pow(self, n) -> "TensorElement":
        if n < 0:
            return self.invert().pow(-n)
        result = self.algebra.tensor_unit(self.arity)
        for _ in range(n):
            result = result * self
        return result

    # -- leg operations --

    def perm(self, sigma) -> "TensorElement":
        """Leg relabeling: leg s of the result carries component sigma[s-1]."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, self.arity + 1)):
            raise ArityMismatch(f"{sigma} is not a permutation of 1..{self.arity}")
        out = {tuple(key[s - 1] for s in sigma): val for key, val in self.entries.items()}
        return TensorElement(self.algebra, self.arity, out, clean=True)

    def transpose(self) -> "TensorElement":
        if self.arity != 2:
            raise ArityMismatch("transpose is the arity-2 leg swap")
        return self.perm((2, 1))

    def embed(self, positions, arity) -> "TensorElement":
        """Place this element on the given legs of H^(x)arity, unit elsewhere."""
        positions = tuple(positions)
        if len(positions) != self.arity:
            raise ArityMismatch("one position per leg")
        if len(set(positions)) != len(positions):
            raise ArityMismatch("duplicate positions")
        if any(not 1 <= p <= arity for p in positions):
            raise ArityMismatch(f"positions {positions} out of range for arity {arity}")
        alg = self.algebra
        rest = [p for p in range(1, arity + 1) if p not in positions]
        unit_support = [(i, v) for i, v in enumerate(alg.unit) if v]
        out = {}
        for key, val in self.entries.items():
            partial = {(): val}
            for _ in rest:
                nxt = {}
                for k, v in partial.items():
                    for i, u in unit_support:
                        _acc(nxt, k + (i,), v * u)
                partial = nxt
            for fill, v in partial.items():
                slot = [None] * arity
                for p, comp in zip(positions, key):
                    slot[p - 1] = comp
                it = iter(fill)
                for p in rest:
                    slot[p - 1] = next(it)
                _acc(out, tuple(slot), v)
        return TensorElement(alg, arity, out, clean=True)

    # -- inversion and matrices --

    def left_matrix(self):
        """Column J holds the coefficients of self * e_J over H^(x)arity."""
        alg = self.algebra
        d, n = alg.dim, self.arity
        size = d ** n
        mat = [[alg.field.zero] * size for _ in range(size)]
        for col, J in enumerate(alg.multi_indices(n)):
            for I, u in self.entries.items():
                partial = {(): u}
                for a, b in zip(I, J):
                    prod = alg.basis_product(a, b)
                    if not prod:
                        partial = None
                        break
                    nxt = {}
                    for key, val in partial.items():
                        for k, c in prod.items():
                            _acc(nxt, key + (k,), val * c)
                    partial = nxt
                    if not partial:
                        partial = None
                        break
                if partial:
                    for K, val in partial.items():
                        row = 0
                        for idx in K:
                            row = row * d + idx
                        mat[row][col] = mat[row][col] + val
        return mat

    def invert(self) -> "TensorElement":
        """Two-sided inverse, via one exact solve of the left-multiplication matrix.

        Both one-sided identities are verified before returning; a left
        inverse that is not also a right inverse raises SingularError.
        """
        alg = self.algebra
        d, n = alg.dim, self.arity
        unit = alg.tensor_unit(n)
        rhs = [alg.field.zero] * (d ** n)
        for K, v in unit.entries.items():
            row = 0
            for idx in K:
                row = row * d + idx
            rhs[row] = v
        x = linalg.solve(alg.field, self.left_matrix(), rhs)
        entries = {}
        for col, J in enumerate(alg.multi_indices(n)):
            if x[col]:
                entries[J] = x[col]
        candidate = TensorElement(alg, n, entries, clean=True)
        if candidate * self != unit:
            raise SingularError("element has a right inverse but no left inverse")
        return candidate

    def is_invertible(self) -> bool:
        try:
            self.invert()
            return True
        except SingularError:
            return False

    # -- conversions --

    def as_element(self) -> AlgElement:
        if self.arity != 1:
            raise ArityMismatch("only arity-1 tensors identify with algebra elements")
        coeffs = [self.algebra.field.zero] * self.algebra.dim
        for (i,), v in self.entries.items():
            coeffs[i] = v
        return AlgElement(self.algebra, tuple(coeffs))

    def scalar(self):
        if self.arity != 0:
            raise ArityMismatch("only arity-0 tensors are scalars")
        return self.entries.get((), self.algebra.field.zero)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra.compatible(other.algebra) and self.arity == other.arity
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.arity, frozenset(self.entries.items())))

    def __repr__(self):
        names = self.algebra.basis_names
        terms = []
        for key in sorted(self.entries):
            label = "(x)".join(names[i] for i in key) if key else "1"
            terms.append(f"({self.entries[key]})*{label}")
        return " + ".join(terms) if terms else "0"


def first_difference(a: TensorElement, b: TensorElement):
    """Smallest multi-index where two tensors differ, with both values (or None)."""
    keys = sorted(set(a.entries) | set(b.entries))
    zero = a.algebra.field.zero
    for key in keys:
        va = a.entries.get(key, zero)
        vb = b.entries.get(key, zero)
        if va != vb:
            return key, va, vb
    return None


class LinearMap:
    """A linear map H -> H^(x)m defined by its images on the basis.

    ``anti=True`` only marks anti-homomorphisms (such as an antipode); the
    map itself is stored and applied linearly, and anti-multiplicativity
    is a property the structure verifiers check, not the representation.
    """

    __slots__ = ("algebra", "out_arity", "columns", "anti", "_elements")

    def __init__(self, algebra, columns, anti=False):
        columns = list(columns)
        if len(columns) != algebra.dim:
            raise ArityMismatch("one column per basis element")
        arities = {c.arity for c in columns}
        if len(arities) != 1:
            raise ArityMismatch("all columns must share one arity")
        self.algebra = algebra
        self.out_arity = arities.pop()
        self.columns = columns
        self.anti = anti
        self._elements = None

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, [algebra.basis_element(i).to_tensor() for i in range(algebra.dim)])

    @classmethod
    def from_matrix(cls, algebra, matrix, anti=False):
        cols = []
        for i in range(algebra.dim):
            entries = {}
            for k in range(algebra.dim):
                v = algebra.field.coerce(matrix[k][i])
                if v:
                    entries[(k,)] = v
            cols.append(TensorElement(algebra, 1, entries, clean=True))
        return cls(algebra, cols, anti=anti)

    @classmethod
    def scalar_map(cls, algebra, values):
        """A map H -> F (arity-0 images), e.g. a counit."""
        cols = []
        for v in values:
            v = algebra.field.coerce(v)
            cols.append(TensorElement(algebra, 0, {(): v} if v else {}, clean=True))
        return cls(algebra, cols)

    def col(self, i) -> TensorElement:
        return self.columns[i]

    def col_element(self, i) -> AlgElement:
        if self._elements is None:
            if self.out_arity != 1:
                raise ArityMismatch("columns are not algebra elements")
            self._elements = [c.as_element() for c in self.columns]
        return self._elements[i]

    def __call__(self, x: AlgElement):
        """Apply to an element; returns a scalar, AlgElement, or TensorElement by arity."""
        out = self.algebra.tensor_zero(self.out_arity)
        for i, v in enumerate(x.coeffs):
            if v:
                out = out + self.columns[i].scale(v)
        if self.out_arity == 0:
            return out.scalar()
        if self.out_arity == 1:
            return out.as_element()
        return out

    def on_leg(self, t: TensorElement, leg: int) -> TensorElement:
        """Apply on one leg of a tensor; the arity changes by out_arity - 1."""
        if not 1 <= leg <= t.arity:
            raise ArityMismatch(f"leg {leg} out of range for arity {t.arity}")
        out = {}
        for key, val in t.entries.items():
            col = self.columns[key[leg - 1]]
            head, tail = key[:leg - 1], key[leg:]
            for sub, v in col.entries.items():
                _acc(out, head + sub + tail, val * v)
        return TensorElement(self.algebra, t.arity - 1 + self.out_arity, out, clean=True)

    def map_tensor(self, t: TensorElement) -> TensorElement:
        """Apply a 1 -> 1 map on every leg (e.g. (S (x) S)R)."""
        if self.out_arity != 1:
            raise ArityMismatch("map_tensor needs a 1 -> 1 map")
        out = t
        for leg in range(1, t.arity + 1):
            out = self.on_leg(out, leg)
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other; other must be 1 -> 1."""
        if other.out_arity != 1:
            raise ArityMismatch("can only precompose with a 1 -> 1 map")
        cols = []
        for i in range(self.algebra.dim):
            img = self(other.col_element(i))
            if self.out_arity == 1:
                img = img.to_tensor()
            elif self.out_arity == 0:
                img = TensorElement(self.algebra, 0, {(): img}, clean=False)
            cols.append(img)
        return LinearMap(self.algebra, cols, anti=self.anti != other.anti)

    def matrix(self):
        if self.out_arity != 1:
            raise ArityMismatch("matrix form needs a 1 -> 1 map")
        d = self.algebra.dim
        mat = [[self.algebra.field.zero] * d for _ in range(d)]
        for i in range(d):
            for (k,), v in self.columns[i].entries.items():
                mat[k][i] = v
        return mat

    def inverse(self) -> "LinearMap":
        inv = linalg.invert_matrix(self.algebra.field, self.matrix())
        return LinearMap.from_matrix(self.algebra, inv, anti=self.anti)

    def swapped(self) -> "LinearMap":
        """For 1 -> 2 maps: the opposite coproduct T o Delta."""
        if self.out_arity != 2:
            raise ArityMismatch("swapped needs a 1 -> 2 map")
        return LinearMap(self.algebra, [c.perm((2, 1)) for c in self.columns], anti=self.anti)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.algebra.compatible(other.algebra)
                and self.out_arity == other.out_arity and self.columns == other.columns)

    def __repr__(self):
        kind = "anti" if self.anti else "linear"
        return f"LinearMap(1->{self.out_arity}, {kind})"


def tensor_of(*elements) -> TensorElement:
    """Outer product a_1 (x) ... (x) a_n of algebra elements."""
    if not elements:
        raise ArityMismatch("tensor_of needs at least one factor")
    out = elements[0].to_tensor()
    for e in elements[1:]:
        out = out @ e.to_tensor()
    return out


def contract(t: TensorElement, *specs) -> TensorElement:
    """Multiply a tensor out into a lower arity, leg by leg.

    Each spec describes one output leg as a sequence of factors, taken in
    order: an AlgElement is a fixed factor, a pair ``(leg, m)`` is the
    image of input leg ``leg`` under the 1 -> 1 map ``m`` (``None`` for
    the identity).  Every input leg must be used exactly once.  For
    instance the reading of ``sum S(X) a Y b S(Z)`` off an arity-3 tensor
    is ``contract(phi, [(1, s), a, (2, None), b, (3, s)])``.
    """
    alg = t.algebra
    used = []
    for spec in specs:
        for item in spec:
            if not isinstance(item, AlgElement):
                used.append(item[0])
    if sorted(used) != list(range(1, t.arity + 1)):
        raise ArityMismatch(f"legs {sorted(used)} do not cover 1..{t.arity} exactly once")
    out = {}
    unit = alg.unit_element
    for key, val in t.entries.items():
        factors = []
        for spec in specs:
            elt = None
            for item in spec:
                if isinstance(item, AlgElement):
                    f = item
                else:
                    leg, m = item
                    f = alg.basis_element(key[leg - 1]) if m is None else m.col_element(key[leg - 1])
                elt = f if elt is None else elt * f
            factors.append(unit if elt is None else elt)
        partial = {(): val}
        dead = False
        for f in factors:
            nxt = {}
            for k, v in partial.items():
                for i, c in enumerate(f.coeffs):
                    if c:
                        _acc(nxt, k + (i,), v * c)
            partial = nxt
            if not partial:
                dead = True
                break
        if not dead:
            for k, v in partial.items():
                _acc(out, k, v)
    return TensorElement(alg, len(specs), out, clean=True)


def contract_element(t: TensorElement, spec) -> AlgElement:
    """Contract a whole tensor into a single algebra element."""
    return contract(t, spec).as_element()
