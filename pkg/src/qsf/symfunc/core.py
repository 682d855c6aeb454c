"""Degree-truncated symmetric functions, plethysm and the plethystic exponential."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..qtcoeff import ONE, ZERO, QtRat, UVPoly, qt_format
from .bases import CLASSICAL, PREFIX, basis_tag, change_matrix
from .partitions import Partition, partitions_of, partition_index, union, z_value

DEFAULT_TRUNCATION = 6


def _scalar(c):
    if isinstance(c, (QtRat, UVPoly)):
        return c
    return QtRat(c)


def _add_into(acc: dict, key, value):
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if not v.is_zero()}


class SymFunc:
    """A symmetric function truncated at degree ``truncation``, stored in one basis.

    Coefficients are :class:`QtRat` or, when series variables are involved,
    :class:`UVPoly`.  Terms above the truncation are dropped on construction
    and the ``flagged`` attribute records that something was lost.
    """

    __slots__ = ("basis", "coeffs", "truncation", "flagged")

    def __init__(self, coeffs=None, basis="schur", truncation=DEFAULT_TRUNCATION, flagged=False):
        self.basis = basis_tag(basis)
        self.truncation = truncation
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = _scalar(c)
            if c.is_zero():
                continue
            if lam.size > truncation:
                flagged = True
                continue
            clean[lam] = clean[lam] + c if lam in clean else c
        self.coeffs = _clean(clean)
        self.flagged = flagged

    @classmethod
    def _trusted(cls, coeffs, basis, truncation, flagged=False) -> "SymFunc":
        obj = object.__new__(cls)
        obj.basis = basis
        obj.coeffs = coeffs
        obj.truncation = truncation
        obj.flagged = flagged
        return obj

    @classmethod
    def basis_element(cls, basis, parts, truncation=DEFAULT_TRUNCATION) -> "SymFunc":
        return cls({Partition(parts): ONE}, basis, truncation)

    @classmethod
    def one(cls, truncation=DEFAULT_TRUNCATION, basis="schur") -> "SymFunc":
        return cls({Partition(()): ONE}, basis, truncation)

    @classmethod
    def zero(cls, truncation=DEFAULT_TRUNCATION, basis="schur") -> "SymFunc":
        return cls({}, basis, truncation)

    # -- structure ------------------------------------------------------
    def coefficient(self, lam):
        return self.coeffs.get(Partition(lam) if not isinstance(lam, Partition) else lam, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        return {lam.size for lam in self.coeffs}

    def homogeneous_degree(self):
        """The degree if all terms share one degree, 0 for zero, else None."""
        degs = self.degrees()
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def component(self, d: int) -> "SymFunc":
        return SymFunc._trusted(
            {k: v for k, v in self.coeffs.items() if k.size == d}, self.basis, self.truncation, self.flagged
        )

    def vector(self, d: int) -> list:
        """Coordinates of the degree-d part in partition order."""
        return [self.coeffs.get(lam, ZERO) for lam in partitions_of(d)]

    @classmethod
    def from_vectors(cls, vectors: dict, basis, truncation, flagged=False) -> "SymFunc":
        coeffs = {}
        for d, vec in vectors.items():
            for lam, c in zip(partitions_of(d), vec):
                if not c.is_zero():
                    coeffs[lam] = c
        return cls._trusted(coeffs, basis_tag(basis), truncation, flagged)

    # -- basis change -----------------------------------------------------
    def to_basis(self, target) -> "SymFunc":
        target = basis_tag(target)
        if target == self.basis:
            return self
        if "htilde" in (target, self.basis):
            from ..macdonald import convert_htilde

            return convert_htilde(self, target)
        vectors = {}
        for d in sorted(self.degrees()):
            mat = change_matrix(self.basis, target, d)
            vec = self.vector(d)
            out = []
            for row in mat:
                acc = ZERO
                for a, b in zip(row, vec):
                    if not a.is_zero() and not b.is_zero():
                        acc = b * a + acc
                out.append(acc)
            vectors[d] = out
        return SymFunc.from_vectors(vectors, target, self.truncation, self.flagged)

    # -- arithmetic -------------------------------------------------------
    def _aligned(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            raise TypeError(f"expected SymFunc, got {type(other).__name__}")
        other = other.to_basis(self.basis)
        trunc = min(self.truncation, other.truncation)
        flag = self.flagged or other.flagged or self.truncation != other.truncation
        return other, trunc, flag

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            if other == 0:
                return self
            other = SymFunc({Partition(()): other}, self.basis, self.truncation)
        other, trunc, flag = self._aligned(other)
        out = {k: v for k, v in self.coeffs.items() if k.size <= trunc}
        for k, v in other.coeffs.items():
            if k.size <= trunc:
                _add_into(out, k, v)
        return SymFunc._trusted(_clean(out), self.basis, trunc, flag)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._trusted({k: -v for k, v in self.coeffs.items()}, self.basis, self.truncation, self.flagged)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymFunc":
        c = _scalar(c)
        if c.is_zero():
            return SymFunc._trusted({}, self.basis, self.truncation, self.flagged)
        return SymFunc._trusted(
            _clean({k: v * c for k, v in self.coeffs.items()}), self.basis, self.truncation, self.flagged
        )

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        other = other.to_basis(self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc._trusted(
            _clean({k: fn(v) for k, v in self.coeffs.items()}), self.basis, self.truncation, self.flagged
        )

    # -- printing ---------------------------------------------------------
    def format(self) -> str:
        if not self.coeffs:
            return "0"
        prefix = PREFIX[self.basis]
        keys = sorted(self.coeffs, key=lambda lam: (lam.size, partition_index(lam.size)[lam]))
        pieces = []
        for lam in keys:
            c = self.coeffs[lam]
            name = f"{prefix}[{','.join(map(str, lam))}]" if lam else ""
            if isinstance(c, UVPoly):
                text = f"({c.format()})"
                pieces.append((False, f"{text}*{name}" if name else text))
                continue
            if name and c.is_one():
                pieces.append((False, name))
            elif name and (-c).is_one():
                pieces.append((True, name))
            else:
                body = qt_format(c)
                if not name:
                    pieces.append((False, body if " " not in body else f"({body})"))
                else:
                    pieces.append((False, f"({body})*{name}"))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SymFunc({self.format()!r}, basis={self.basis!r}, N={self.truncation})"


# -- convenience constructors -------------------------------------------------

def _element(basis):
    def make(*parts, N=DEFAULT_TRUNCATION):
        if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
            parts = tuple(parts[0])
        return SymFunc.basis_element(basis, sorted(parts, reverse=True), N)

    make.__name__ = PREFIX[basis]
    return make


m = _element("monomial")
e = _element("elementary")
h = _element("homogeneous")
p = _element("powersum")
s = _element("schur")


def to_basis(F: SymFunc, target) -> SymFunc:
    return F.to_basis(target)


# -- products and pairings -----------------------------------------------------

def _pmul_coeffs(a: dict, b: dict, N: int) -> tuple:
    """Product of two power-sum coefficient maps, truncated at degree N."""
    out: dict = {}
    dropped = False
    for la, ca in a.items():
        sa = la.size
        for lb, cb in b.items():
            if sa + lb.size > N:
                dropped = True
                continue
            _add_into(out, union(la, lb), ca * cb)
    return _clean(out), dropped


def multiply(F: SymFunc, G: SymFunc) -> SymFunc:
    """F * G truncated at the smaller truncation, returned in F's basis."""
    N = min(F.truncation, G.truncation)
    flag = F.flagged or G.flagged or F.truncation != G.truncation
    a = F.to_basis("powersum").coeffs
    b = G.to_basis("powersum").coeffs
    out, _ = _pmul_coeffs(a, b, N)
    return SymFunc._trusted(out, "powersum", N, flag).to_basis(F.basis)


def hall_pair(F: SymFunc, G: SymFunc):
    """Hall inner product <F, G>; power sums are orthogonal with <p_lam, p_lam> = z_lam."""
    a = F.to_basis("powersum").coeffs
    b = G.to_basis("powersum").coeffs
    acc = ZERO
    for lam, c in a.items():
        other = b.get(lam)
        if other is not None:
            acc = c * other * z_value(lam) + acc
    return acc


def _skew_p(mu, lam):
    """p_mu^perp p_lam as (partition, rational) or None."""
    rest = list(lam)
    for part in mu:
        try:
            rest.remove(part)
        except ValueError:
            return None
    nu = Partition._trusted(tuple(rest))
    return nu, Fraction(z_value(lam), z_value(nu))


def skew_apply(F: SymFunc, G: SymFunc) -> SymFunc:
    """F^perp G, the Hall adjoint of multiplication by F, in G's basis."""
    a = F.to_basis("powersum").coeffs
    b = G.to_basis("powersum").coeffs
    out: dict = {}
    for mu, cm in a.items():
        for lam, cl in b.items():
            hit = _skew_p(mu, lam)
            if hit is None:
                continue
            nu, ratio = hit
            _add_into(out, nu, cl * cm * ratio)
    N = min(F.truncation, G.truncation)
    return SymFunc._trusted(_clean(out), "powersum", N, F.flagged or G.flagged).to_basis(G.basis)


# -- alphabets and plethysm ----------------------------------------------------

@dataclass(frozen=True)
class AlphabetTerm:
    coeff: QtRat
    u: int = 0
    v: int = 0
    z: int = 0
    letter: str = "X"

    def weight(self) -> int:
        return (1 if self.letter == "X" else 0) + self.u + self.v + abs(self.z)


class Alphabet:
    """Signed combination of scalar monomials and copies of X, e.g. ``X + M/z``."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict = {}
        for term in terms:
            if term.letter not in ("X", "1"):
                raise ValueError(f"letter must be 'X' or '1', got {term.letter!r}")
            if term.u < 0 or term.v < 0:
                raise ValueError("u, v exponents must be nonnegative")
            key = (term.u, term.v, term.z, term.letter)
            _add_into(merged, key, QtRat(term.coeff) if not isinstance(term.coeff, QtRat) else term.coeff)
        self.terms = tuple(
            AlphabetTerm(c, *key) for key, c in sorted(merged.items(), key=lambda kv: kv[0]) if not c.is_zero()
        )

    @classmethod
    def X(cls, coeff=1, u=0, v=0, z=0) -> "Alphabet":
        return cls([AlphabetTerm(_scalar(coeff), u, v, z, "X")])

    @classmethod
    def unit(cls, coeff=1, u=0, v=0, z=0) -> "Alphabet":
        return cls([AlphabetTerm(_scalar(coeff), u, v, z, "1")])

    def __add__(self, other):
        return Alphabet(self.terms + other.terms)

    def __neg__(self):
        return Alphabet([AlphabetTerm(-t.coeff, t.u, t.v, t.z, t.letter) for t in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Alphabet":
        c = _scalar(c)
        return Alphabet([AlphabetTerm(t.coeff * c, t.u, t.v, t.z, t.letter) for t in self.terms])

    def shift(self, u=0, v=0, z=0) -> "Alphabet":
        """Multiply every term by the monomial u^u v^v z^z."""
        return Alphabet([AlphabetTerm(t.coeff, t.u + u, t.v + v, t.z + z, t.letter) for t in self.terms])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def is_identity(self) -> bool:
        return len(self.terms) == 1 and self.terms[0] == AlphabetTerm(ONE)

    def __repr__(self):
        bits = []
        for t in self.terms:
            mono = "".join(
                f"{n}^{k}" if k not in (0, 1) else (n if k == 1 else "")
                for n, k in (("u", t.u), ("v", t.v), ("z", t.z))
            )
            bits.append(f"({qt_format(t.coeff)}){mono}{'X' if t.letter == 'X' else ''}")
        return "Alphabet(" + " + ".join(bits) + ")"


class ZGradedSym:
    """Finite Laurent polynomial in z with power-sum SymFunc coefficients."""

    __slots__ = ("components", "z_window", "truncation", "order", "truncated")

    def __init__(self, components=None, z_window=DEFAULT_TRUNCATION, truncation=DEFAULT_TRUNCATION,
                 order=DEFAULT_TRUNCATION, truncated=False):
        self.z_window = z_window
        self.truncation = truncation
        self.order = order
        self.truncated = truncated
        comps = {}
        for zexp, coeffs in (components or {}).items():
            if isinstance(coeffs, SymFunc):
                if coeffs.flagged:
                    self.truncated = True
                coeffs = coeffs.to_basis("powersum").coeffs
            if abs(zexp) > z_window:
                if coeffs:
                    self.truncated = True
                continue
            clean = {}
            for lam, c in coeffs.items():
                lam = lam if isinstance(lam, Partition) else Partition(lam)
                if lam.size > truncation:
                    self.truncated = True
                    continue
                c = _scalar(c)
                if not c.is_zero():
                    clean[lam] = c
            if clean:
                comps[zexp] = clean
        self.components = comps

    @classmethod
    def _trusted(cls, comps, z_window, truncation, order, truncated):
        obj = object.__new__(cls)
        obj.components = comps
        obj.z_window = z_window
        obj.truncation = truncation
        obj.order = order
        obj.truncated = truncated
        return obj

    def _like(self, comps, truncated=None):
        return ZGradedSym._trusted(
            comps, self.z_window, self.truncation, self.order, self.truncated if truncated is None else truncated
        )

    def coefficient(self, zexp: int, basis="powersum") -> SymFunc:
        """The z^zexp component as a SymFunc."""
        comp = self.components.get(zexp, {})
        return SymFunc._trusted(dict(comp), "powersum", self.truncation, self.truncated).to_basis(basis)

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other: "ZGradedSym") -> "ZGradedSym":
        out = {z: dict(c) for z, c in self.components.items()}
        for zexp, comp in other.components.items():
            tgt = out.setdefault(zexp, {})
            for lam, c in comp.items():
                _add_into(tgt, lam, c)
        out = {z: _clean(c) for z, c in out.items()}
        return self._like({z: c for z, c in out.items() if c}, self.truncated or other.truncated)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ZGradedSym":
        c = _scalar(c)
        comps = {z: _clean({lam: v * c for lam, v in comp.items()}) for z, comp in self.components.items()}
        return self._like({z: v for z, v in comps.items() if v})

    def __mul__(self, other):
        if not isinstance(other, ZGradedSym):
            return self.scale(other)
        N = min(self.truncation, other.truncation)
        win = min(self.z_window, other.z_window)
        truncated = self.truncated or other.truncated
        out: dict = {}
        for z1, c1 in self.components.items():
            for z2, c2 in other.components.items():
                zexp = z1 + z2
                if abs(zexp) > win:
                    truncated = True
                    continue
                prod, dropped = _pmul_coeffs(c1, c2, N)
                truncated = truncated or dropped
                tgt = out.setdefault(zexp, {})
                for lam, c in prod.items():
                    _add_into(tgt, lam, c)
        comps = {z: _clean(c) for z, c in out.items()}
        return ZGradedSym._trusted(
            {z: c for z, c in comps.items() if c}, win, N, min(self.order, other.order), truncated
        )

    __rmul__ = __mul__

    def weight_filter(self, cutoff: int) -> "ZGradedSym":
        """Keep monomials with X-degree + u + v + |z| <= cutoff."""
        out = {}
        for zexp, comp in self.components.items():
            kept = {}
            for lam, c in comp.items():
                base = lam.size + abs(zexp)
                if isinstance(c, UVPoly):
                    c = UVPoly({k: v for k, v in c.terms.items() if base + k[0] + k[1] <= cutoff}, c.order)
                    if not c.is_zero():
                        kept[lam] = c
                elif base <= cutoff:
                    kept[lam] = c
            if kept:
                out[zexp] = kept
        return self._like(out)

    def __eq__(self, other):
        if not isinstance(other, ZGradedSym):
            return NotImplemented
        return self.components == other.components

    def __repr__(self):
        body = ", ".join(
            f"z^{zexp}: {self.coefficient(zexp).format()}" for zexp in sorted(self.components)
        )
        return f"ZGradedSym({{{body}}})"


def _pn_of_alphabet(A: Alphabet, n: int, N: int, z_window: int, order: int) -> ZGradedSym:
    comps: dict = {}
    truncated = False
    for term in A.terms:
        c = term.coeff.twist(n)
        iu, iv, iz = n * term.u, n * term.v, n * term.z
        if iu > order or iv > order:
            truncated = True
            continue
        if abs(iz) > z_window:
            truncated = True
            continue
        lam = Partition._trusted((n,)) if term.letter == "X" else Partition._trusted(())
        if lam.size > N:
            truncated = True
            continue
        coeff = c if (iu == 0 and iv == 0) else UVPoly({(iu, iv): c}, order)
        _add_into(comps.setdefault(iz, {}), lam, coeff)
    comps = {z: _clean(c) for z, c in comps.items()}
    return ZGradedSym._trusted({z: c for z, c in comps.items() if c}, z_window, N, order, truncated)


def plethysm(F: SymFunc, A: Alphabet, z_window=None, order=None) -> ZGradedSym:
    """F[A]: p_n is additive over terms of A, twists scalars and raises u, v, z to the n."""
    N = F.truncation
    z_window = N if z_window is None else z_window
    order = N if order is None else order
    coeffs = F.to_basis("powersum").coeffs
    cache: dict = {}
    total = ZGradedSym._trusted({}, z_window, N, order, F.flagged)
    unit = ZGradedSym._trusted({0: {Partition(()): ONE}}, z_window, N, order, False)
    for lam, c in coeffs.items():
        term = unit
        for part in lam:
            if part not in cache:
                cache[part] = _pn_of_alphabet(A, part, N, z_window, order)
            term = term * cache[part]
        total = total + term.scale(c)
    return total


def pexp(A: Alphabet, cutoff=None, truncation=DEFAULT_TRUNCATION, z_window=None, order=None) -> ZGradedSym:
    """The plethystic exponential sum_n h_n[A] = exp(sum_n p_n[A]/n), truncated.

    Every term of A must carry positive weight (an X, or a power of u, v or
    z); otherwise the series does not truncate.
    """
    z_window = truncation if z_window is None else z_window
    order = truncation if order is None else order
    for term in A.terms:
        if term.weight() == 0:
            raise ValueError(
                f"pexp argument has a pure scalar term {qt_format(term.coeff)}; the series does not truncate"
            )
    max_weight = truncation + 2 * order + z_window
    if cutoff is not None:
        max_weight = min(max_weight, cutoff)
    log = ZGradedSym._trusted({}, z_window, truncation, order, False)
    for n in range(1, max_weight + 1):
        log = log + _pn_of_alphabet(A, n, truncation, z_window, order).scale(Fraction(1, n))
    one = ZGradedSym._trusted({0: {Partition(()): ONE}}, z_window, truncation, order, False)
    result = one
    power = one
    for k in range(1, max_weight + 1):
        power = (power * log).scale(Fraction(1, k))
        if cutoff is not None:
            power = power.weight_filter(cutoff)
        if power.is_zero():
            break
        result = result + power
    if cutoff is not None:
        result = result.weight_filter(cutoff)
    # the truncation flag of log is an artifact of bounding n, not a loss
    result.truncated = False
    return result
