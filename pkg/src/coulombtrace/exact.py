"""Exact arithmetic: Gaussian rationals, multivariate polynomials, affine forms.

Everything in the symbolic layer is built over Q(i).  Coefficients are never
floats; complex floats appear only at evaluation boundaries.  Polynomials use
a sparse exponent-map representation with graded-lexicographic monomial order
so canonical forms (and hence exact equality tests) are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


class DivisibilityFailure(Exception):
    """Exact polynomial division failed; carries the nonzero remainder."""

    def __init__(self, remainder: "MultiPoly"):
        self.remainder = remainder
        super().__init__(f"not divisible, remainder {remainder}")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build exact rational from {type(x).__name__}")


@dataclass(frozen=True, slots=True)
class QQi:
    """Gaussian rational re + im*i with reduced Fraction components."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @staticmethod
    def of(x) -> "QQi":
        if isinstance(x, QQi):
            return x
        return QQi(_frac(x))

    def __add__(self, other) -> "QQi":
        o = QQi.of(other)
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "QQi":
        o = QQi.of(other)
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "QQi":
        return QQi.of(other) - self

    def __neg__(self) -> "QQi":
        return QQi(-self.re, -self.im)

    def __mul__(self, other) -> "QQi":
        o = QQi.of(other)
        return QQi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QQi":
        o = QQi.of(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other) -> "QQi":
        return QQi.of(other) / self

    def conj(self) -> "QQi":
        return QQi(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QQi(other)
        if not isinstance(other, QQi):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{istr}"


ONE = QQi(1)
ZERO = QQi(0)
I = QQi(0, 1)
HALF = QQi(Fraction(1, 2))


def _grlex_key(exps: Exponents):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial over Q(i) with named variables.

    Terms map exponent vectors to nonzero QQi coefficients.  Monomial order is
    graded lex on the fixed variable tuple.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponents, QQi] | None = None):
        self.vars = tuple(vars)
        clean: dict[Exponents, QQi] = {}
        if terms:
            for e, c in terms.items():
                c = QQi.of(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(vars: Sequence[str], c) -> "MultiPoly":
        c = QQi.of(c)
        z = tuple(0 for _ in vars)
        return MultiPoly(vars, {z: c} if not c.is_zero() else {})

    @staticmethod
    def var(vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        k = vars.index(name)
        e = tuple(1 if j == k else 0 for j in range(len(vars)))
        return MultiPoly(vars, {e: ONE})

    # -- bookkeeping -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> QQi:
        z = tuple(0 for _ in self.vars)
        return self.terms.get(z, ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        k = self.vars.index(name)
        return max(e[k] for e in self.terms)

    def leading(self) -> tuple[Exponents, QQi]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    @staticmethod
    def _align(a: "MultiPoly", b: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if a.vars == b.vars:
            return a, b
        vs = tuple(dict.fromkeys(a.vars + b.vars))
        return a.extend_vars(vs), b.extend_vars(vs)

    def extend_vars(self, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = [vars.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for j, k in zip(idx, e):
                ne[j] = k
            terms[tuple(ne)] = c
        return MultiPoly(vars, terms)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.vars, other)

    def __add__(self, other) -> "MultiPoly":
        a, b = MultiPoly._align(self, self._coerce(other))
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        a, b = MultiPoly._align(self, self._coerce(other))
        terms: dict[Exponents, QQi] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prev = terms.get(e)
                terms[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(self.vars, ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "MultiPoly":
        c = QQi.of(c)
        if c.is_zero():
            return MultiPoly(self.vars, {})
        return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction, QQi)):
                other = MultiPoly.constant(self.vars, other)
            else:
                return NotImplemented
        a, b = MultiPoly._align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def subst_shift(self, name: str, delta: QQi) -> "MultiPoly":
        """Substitute var -> var + delta."""
        k = self.vars.index(name)
        out = MultiPoly(self.vars, {})
        x = MultiPoly.var(self.vars, name) + MultiPoly.constant(self.vars, delta)
        pow_cache: dict[int, MultiPoly] = {0: MultiPoly.constant(self.vars, ONE)}

        def xpow(n: int) -> MultiPoly:
            if n not in pow_cache:
                pow_cache[n] = xpow(n - 1) * x
            return pow_cache[n]

        for e, c in self.terms.items():
            rest = tuple(v if j != k else 0 for j, v in enumerate(e))
            out = out + xpow(e[k]).scale(c) * MultiPoly(self.vars, {rest: ONE})
        return out

    def subst_value(self, name: str, value: QQi) -> "MultiPoly":
        """Substitute var -> constant, dropping the variable from the list."""
        k = self.vars.index(name)
        value = QQi.of(value)
        nvars = self.vars[:k] + self.vars[k + 1:]
        terms: dict[Exponents, QQi] = {}
        for e, c in self.terms.items():
            coeff = c
            for _ in range(e[k]):
                coeff = coeff * value
            ne = e[:k] + e[k + 1:]
            terms[ne] = terms.get(ne, ZERO) + coeff
        return MultiPoly(nvars, terms)

    def permute_vars(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables in place (e.g. a Weyl permutation)."""
        new_names = tuple(mapping.get(v, v) for v in self.vars)
        if sorted(new_names) != sorted(self.vars):
            raise ValueError("permutation must map the variable set to itself")
        idx = [new_names.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for j, target in enumerate(idx):
                ne[j] = e[target]
            terms[tuple(ne)] = c
        return MultiPoly(self.vars, terms)

    # -- evaluation --------------------------------------------------------

    def eval(self, point: Mapping[str, complex]) -> complex:
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for name, k in zip(self.vars, e):
                if k:
                    v *= point[name] ** k
            total += v
        return total

    def eval_batch(self, cols: Mapping[str, "object"]):
        """Vectorized evaluation; cols maps var name to a numpy array."""
        import numpy as np

        total = None
        for e, c in self.terms.items():
            v = complex(c)
            acc = None
            for name, k in zip(self.vars, e):
                if k:
                    p = cols[name] ** k
                    acc = p if acc is None else acc * p
            term = v if acc is None else v * acc
            total = term if total is None else total + term
        if total is None:
            return np.zeros(1, dtype=complex)
        return total

    # -- division / gcd ----------------------------------------------------

    def divmod_single(self, d: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Divide by a single divisor under graded lex; returns (q, r)."""
        a, d = MultiPoly._align(self, d)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        de, dc = d.leading()
        q_terms: dict[Exponents, QQi] = {}
        r_terms: dict[Exponents, QQi] = {}
        cur = dict(a.terms)
        while cur:
            e = max(cur, key=_grlex_key)
            c = cur.pop(e)
            if all(x >= y for x, y in zip(e, de)):
                qe = tuple(x - y for x, y in zip(e, de))
                qc = c / dc
                q_terms[qe] = q_terms.get(qe, ZERO) + qc
                for e2, c2 in d.terms.items():
                    if e2 == de:
                        continue
                    te = tuple(x + y for x, y in zip(qe, e2))
                    nv = cur.get(te, ZERO) - qc * c2
                    if nv.is_zero():
                        cur.pop(te, None)
                    else:
                        cur[te] = nv
            else:
                r_terms[e] = c
        return MultiPoly(a.vars, q_terms), MultiPoly(a.vars, r_terms)

    def divexact(self, d: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod_single(d)
        if not r.is_zero():
            raise DivisibilityFailure(r)
        return q

    def _as_univariate(self, name: str) -> dict[int, "MultiPoly"]:
        k = self.vars.index(name)
        rest = self.vars[:k] + self.vars[k + 1:]
        coeffs: dict[int, dict[Exponents, QQi]] = {}
        for e, c in self.terms.items():
            coeffs.setdefault(e[k], {})[e[:k] + e[k + 1:]] = c
        return {d: MultiPoly(rest, t) for d, t in coeffs.items()}

    @staticmethod
    def _from_univariate(vars: Sequence[str], name: str, coeffs: Mapping[int, "MultiPoly"]) -> "MultiPoly":
        vars = tuple(vars)
        k = vars.index(name)
        terms: dict[Exponents, QQi] = {}
        for d, p in coeffs.items():
            for e, c in p.terms.items():
                ne = e[:k] + (d,) + e[k:]
                terms[ne] = c
        return MultiPoly(vars, terms)

    def monic(self) -> "MultiPoly":
        if self.is_zero():
            return self
        _, lc = self.leading()
        return self.scale(ONE / lc)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            cs = f"({c})" if ("+" in repr(c) or "-" in repr(c)[1:]) else repr(c)
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


def _active_vars(*polys: MultiPoly) -> list[str]:
    out = []
    for p in polys:
        for e in p.terms:
            for v, k in zip(p.vars, e):
                if k and v not in out:
                    out.append(v)
    return out


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd over Q(i) via content/primitive-part recursion."""
    a, b = MultiPoly._align(a, b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    act = _active_vars(a, b)
    if not act:
        return MultiPoly.constant(a.vars, ONE)
    name = act[0]
    if len(act) == 1 or (a.degree_in(name) >= 0 and b.degree_in(name) >= 0):
        if a.degree_in(name) == -1 or b.degree_in(name) == -1:
            # One of them is free of the main variable: gcd divides contents.
            ca = _content(a, name)
            cb = _content(b, name)
            return poly_gcd(ca, cb)
        return _gcd_main(a, b, name)
    return _gcd_main(a, b, name)


def _content(p: MultiPoly, name: str) -> MultiPoly:
    coeffs = list(p._as_univariate(name).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    return g.extend_vars(p.vars)


def _gcd_main(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    ca, cb = _content(a, name), _content(b, name)
    cg = poly_gcd(ca, cb)
    pa = a.divexact(ca)
    pb = b.divexact(cb)
    # Primitive PRS on the main variable.
    if pa.degree_in(name) < pb.degree_in(name):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = _prem(pa, pb, name)
        pa = pb
        if r.is_zero():
            pb = r
        else:
            pb = r.divexact(_content(r, name))
    res = pa.divexact(_content(pa, name))
    return (cg * res).monic()


def _prem(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    """Pseudo-remainder of a by b in the given main variable."""
    da, db = a.degree_in(name), b.degree_in(name)
    if da < db:
        return a
    bu = b._as_univariate(name)
    lb = bu[db].extend_vars(b.vars)
    r = a
    while not r.is_zero() and r.degree_in(name) >= db:
        dr = r.degree_in(name)
        ru = r._as_univariate(name)
        lr = ru[dr].extend_vars(r.vars)
        xk = MultiPoly.var(r.vars, name) ** (dr - db)
        r = r * lb - b * lr * xk
    return r


class RationalFunction:
    """Quotient of MultiPolys, stored reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, reduce: bool = True):
        if den is None:
            den = MultiPoly.constant(num.vars, ONE)
        num, den = MultiPoly._align(num, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if not (g.is_constant()):
                num = num.divexact(g)
                den = den.divexact(g)
        if num.is_zero():
            den = MultiPoly.constant(num.vars, ONE)
        _, lc = den.leading()
        if not lc.is_one():
            inv = ONE / lc
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def constant(vars: Sequence[str], c) -> "RationalFunction":
        return RationalFunction(MultiPoly.constant(vars, c), reduce=False)

    @staticmethod
    def of(x, vars: Sequence[str]) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, MultiPoly):
            return RationalFunction(x, reduce=False)
        return RationalFunction.constant(vars, x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __add__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other, self.num.vars)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.of(other, self.num.vars))

    def __mul__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other, self.num.vars)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other, self.num.vars)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            other = RationalFunction.of(other, self.num.vars)
        a, b = MultiPoly._align(self.num, other.num)
        c, d = MultiPoly._align(self.den, other.den)
        return a == b and c == d

    def __hash__(self):
        return hash((self.num, self.den))

    def subst_shift(self, name: str, delta: QQi) -> "RationalFunction":
        return RationalFunction(self.num.subst_shift(name, delta), self.den.subst_shift(name, delta))

    def permute_vars(self, mapping: Mapping[str, str]) -> "RationalFunction":
        return RationalFunction(self.num.permute_vars(mapping), self.den.permute_vars(mapping))

    def eval(self, point: Mapping[str, complex]) -> complex:
        d = self.den.eval(point)
        return self.num.eval(point) / d

    def eval_batch(self, cols):
        return self.num.eval_batch(cols) / self.den.eval_batch(cols)

    def __repr__(self) -> str:
        if self.den.is_constant() and self.den.constant_value().is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"


@dataclass(frozen=True)
class AffineForm:
    """Affine-linear form const + sum_k grad[k]*vars[k] over Q(i)."""

    vars: tuple[str, ...]
    const: QQi
    grad: tuple[QQi, ...]

    def __init__(self, vars: Sequence[str], const, grad: Sequence):
        vars = tuple(vars)
        grad = tuple(QQi.of(g) for g in grad)
        if len(grad) != len(vars):
            raise ValueError("gradient length must match variable count")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "const", QQi.of(const))
        object.__setattr__(self, "grad", grad)

    @staticmethod
    def zero(vars: Sequence[str]) -> "AffineForm":
        return AffineForm(vars, ZERO, [ZERO] * len(tuple(vars)))

    @staticmethod
    def coordinate(vars: Sequence[str], k: int, scale=1) -> "AffineForm":
        vars = tuple(vars)
        g = [ZERO] * len(vars)
        g[k] = QQi.of(scale)
        return AffineForm(vars, ZERO, g)

    def eval(self, point: Sequence[complex]) -> complex:
        if len(point) != len(self.vars):
            raise ValueError("point dimension mismatch")
        total = complex(self.const)
        for g, x in zip(self.grad, point):
            if not g.is_zero():
                total += complex(g) * x
        return total

    def eval_batch(self, cols):
        total = None
        for v, g in zip(self.vars, self.grad):
            if not g.is_zero():
                t = complex(g) * cols[v]
                total = t if total is None else total + t
        c = complex(self.const)
        if total is None:
            import numpy as np

            return np.asarray(c)
        return total + c

    def __add__(self, other) -> "AffineForm":
        if isinstance(other, AffineForm):
            if other.vars != self.vars:
                raise ValueError("affine forms over different variables")
            return AffineForm(self.vars, self.const + other.const,
                              [a + b for a, b in zip(self.grad, other.grad)])
        return AffineForm(self.vars, self.const + QQi.of(other), self.grad)

    def __sub__(self, other) -> "AffineForm":
        if isinstance(other, AffineForm):
            return self + (-other)
        return self + (-QQi.of(other))

    def __neg__(self) -> "AffineForm":
        return AffineForm(self.vars, -self.const, [-g for g in self.grad])

    def scale(self, c) -> "AffineForm":
        c = QQi.of(c)
        return AffineForm(self.vars, c * self.const, [c * g for g in self.grad])

    def subst_shift(self, k: int, delta: QQi) -> "AffineForm":
        """Substitute vars[k] -> vars[k] + delta."""
        return AffineForm(self.vars, self.const + self.grad[k] * delta, self.grad)

    def permute(self, perm: Sequence[int]) -> "AffineForm":
        """New form whose coefficient on vars[perm[k]] is the old one on vars[k]."""
        g = [ZERO] * len(self.grad)
        for k, target in enumerate(perm):
            g[target] = self.grad[k]
        return AffineForm(self.vars, self.const, g)

    def is_zero(self) -> bool:
        return self.const.is_zero() and all(g.is_zero() for g in self.grad)

    def is_constant(self) -> bool:
        return all(g.is_zero() for g in self.grad)

    def to_poly(self) -> MultiPoly:
        terms: dict[Exponents, QQi] = {}
        n = len(self.vars)
        if not self.const.is_zero():
            terms[tuple(0 for _ in range(n))] = self.const
        for k, g in enumerate(self.grad):
            if not g.is_zero():
                e = tuple(1 if j == k else 0 for j in range(n))
                terms[e] = g
        return MultiPoly(self.vars, terms)

    def vanishes_on_reals(self) -> bool:
        """Whether const + grad.sigma = 0 has a solution with all sigma real."""
        re_grad = [g.re for g in self.grad]
        im_grad = [g.im for g in self.grad]
        if all(g == 0 for g in re_grad) and all(g == 0 for g in im_grad):
            return self.const.is_zero()
        # Two real equations Re = 0 and Im = 0 in n real unknowns.  Solvable
        # unless the linear parts are proportional with inconsistent constants.
        if all(g == 0 for g in re_grad):
            return _solvable_1d(im_grad, self.const.im) and self.const.re == 0
        if all(g == 0 for g in im_grad):
            return _solvable_1d(re_grad, self.const.re) and self.const.im == 0
        # Both parts nontrivial: check proportionality im = t * re.
        t = None
        for a, b in zip(re_grad, im_grad):
            if a != 0:
                t = b / a
                break
        if t is not None and all(b == t * a for a, b in zip(re_grad, im_grad)):
            return self.const.im == t * self.const.re
        return True

    def __repr__(self) -> str:
        parts = []
        if not self.const.is_zero():
            parts.append(repr(self.const))
        for v, g in zip(self.vars, self.grad):
            if g.is_zero():
                continue
            if g.is_one():
                parts.append(v)
            elif g == QQi(-1):
                parts.append(f"-{v}")
            else:
                parts.append(f"({g})*{v}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def _solvable_1d(grad: list[Fraction], const: Fraction) -> bool:
    if all(g == 0 for g in grad):
        return const == 0
    return True


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact ring operation dispatch for the polynomial layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divexact(n: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Exact division; raises DivisibilityFailure with the remainder witness."""
    return n.divexact(d)


def eval_affine(f: AffineForm, point: Sequence[complex]) -> complex:
    return f.eval(point)
