"""Sparse Laurent polynomials with exact integer coefficients.

A `LaurentPoly` is an element of Z[x_1^{+-1}, ..., x_q^{+-1}] stored as a
map from exponent vectors to nonzero coefficients.  Cluster variables,
exchange polynomials, y-variables and characters all live here.  The
inner loops (product, exact division) are delegated to `guca.kernel`.
"""

from . import kernel


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact is not.

    In seed mutation this indicates a genuine bug (it would contradict
    the Laurent phenomenon), hence a dedicated exception type.
    """


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError("exponent length mismatch")
                    self.terms[tuple(e)] = c

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else None)

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff} if coeff else None)

    @classmethod
    def variable(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    # -- ring structure ----------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        self._check(other)
        return LaurentPoly(self.nvars, kernel.add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly(self.nvars)
            return LaurentPoly(self.nvars,
                               {e: c * other for e, c in self.terms.items()})
        self._check(other)
        return LaurentPoly(self.nvars, kernel.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            ((e, c),) = self.terms.items()
            if c * c != 1:
                raise ValueError("coefficient is not a unit")
            return LaurentPoly(self.nvars,
                               {tuple(n * x for x in e): c if n % 2 else 1})
        out = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def try_divexact(self, other):
        """Quotient self/other when exact in the Laurent ring, else None."""
        self._check(other)
        q = kernel.divexact(self.terms, other.terms)
        return None if q is None else LaurentPoly(self.nvars, q)

    def divexact(self, other):
        q = self.try_divexact(other)
        if q is None:
            raise ExactDivisionError("laurent division is not exact")
        return q

    # -- queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def exponents(self):
        return list(self.terms)

    def polynomial_in(self, indices):
        """True when every exponent at the given positions is >= 0."""
        return all(all(e[i] >= 0 for i in indices) for e in self.terms)

    def coefficients_by_var(self, i):
        """Split as sum_k c_k x_i^k; returns {k: c_k with slot i zeroed}."""
        parts = {}
        for e, c in self.terms.items():
            k = e[i]
            ee = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[ee] = c
        return {k: LaurentPoly(self.nvars, t) for k, t in parts.items()}

    def drop_var(self, i):
        """Forget variable i; every exponent there must already be zero."""
        out = {}
        for e, c in self.terms.items():
            if e[i] != 0:
                raise ValueError("variable still present")
            out[e[:i] + e[i + 1:]] = c
        return LaurentPoly(self.nvars - 1, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        return isinstance(other, LaurentPoly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"LaurentPoly({self.to_str()})"

    def to_str(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{names[i]}" + (f"^{k}" if k != 1 else "")
                for i, k in enumerate(e) if k
            )
            if not mono:
                bits.append(f"{c:+d}")
            elif c == 1:
                bits.append(f"+{mono}")
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c:+d}*{mono}")
        s = " ".join(bits)
        return s[1:] if s.startswith("+") else s

    # -- serialization -----------------------------------------------

    def to_json(self):
        return [[list(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars, data):
        return cls(nvars, {tuple(e): c for e, c in data})
