# sympow/polyring.py
"""
Exact coefficient fields, monomial orders, ring descriptors and polynomials.

Polynomials are thin immutable wrappers around sympy's sparse ``PolyElement``.
Every wrapper remembers its ``RingSpec`` so that cross-ring arithmetic is
caught instead of silently coerced.
"""

from enum import Enum
from functools import lru_cache
from operator import itemgetter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import Symbol, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import ProductOrder, grevlex, grlex, lex
from sympy.polys.rings import PolyRing

from .exceptions import PreconditionError, RingError, RingMismatchError
from .utils.parser import PolyParser, parse_ring_text

Monomial = Tuple[int, ...]


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


# ===== Coefficient fields =====

class FieldKind(str, Enum):
    RATIONAL = "QQ"
    PRIME = "Fp"

    def __str__(self):
        return self.value


class CoefficientField(BaseModel):
    """Exact rationals, or the prime field with ``modulus`` elements."""

    model_config = ConfigDict(frozen=True)

    kind: FieldKind = Field(default=FieldKind.RATIONAL, description="QQ or Fp")
    modulus: Optional[int] = Field(default=None, description="Prime modulus for Fp")

    @model_validator(mode="after")
    def _check_modulus(self):
        if self.kind == FieldKind.PRIME:
            if self.modulus is None or self.modulus <= 2 or not isprime(self.modulus):
                raise ValueError(f"modulus must be a prime > 2, got {self.modulus}")
        elif self.modulus is not None:
            raise ValueError("QQ takes no modulus")
        return self

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(kind=FieldKind.PRIME, modulus=p)

    def domain(self):
        return _domain(self.kind, self.modulus)

    def __str__(self):
        return "QQ" if self.kind == FieldKind.RATIONAL else f"Fp({self.modulus})"


@lru_cache(maxsize=None)
def _domain(kind: FieldKind, modulus: Optional[int]):
    return QQ if kind == FieldKind.RATIONAL else GF(modulus)


# ===== Monomial orders =====

class OrderKind(str, Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"
    ELIMINATION = "elim"
    GREVLEX_LAST = "grevlex-last"

    def __str__(self):
        return self.value


class MonomialOrder(BaseModel):
    """
    Monomial order descriptor.

    ``elimination(k)`` compares the first k variables by grevlex first and
    breaks ties with grevlex on the rest, so any monomial involving one of
    the first k variables beats every monomial free of them.
    """

    model_config = ConfigDict(frozen=True)

    kind: OrderKind = OrderKind.GREVLEX
    block: int = Field(default=0, ge=0, description="Eliminated block size for elim, moved variable index for grevlex-last")

    @model_validator(mode="after")
    def _check_block(self):
        if self.kind == OrderKind.ELIMINATION and self.block < 1:
            raise ValueError("elimination order needs a block of at least one variable")
        if self.kind not in (OrderKind.ELIMINATION, OrderKind.GREVLEX_LAST) and self.block:
            raise ValueError(f"{self.kind} order takes no block")
        return self

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(kind=OrderKind.LEX)

    @classmethod
    def grlex(cls) -> "MonomialOrder":
        return cls(kind=OrderKind.GRLEX)

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(kind=OrderKind.GREVLEX)

    @classmethod
    def elimination(cls, k: int) -> "MonomialOrder":
        return cls(kind=OrderKind.ELIMINATION, block=k)

    @classmethod
    def grevlex_last(cls, index: int) -> "MonomialOrder":
        """grevlex with variable ``index`` moved to the last (cheapest) position."""
        return cls(kind=OrderKind.GREVLEX_LAST, block=index)

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        if text in ("lex", "grlex", "grevlex"):
            return cls(kind=OrderKind(text))
        if text.startswith("elim(") and text.endswith(")"):
            return cls.elimination(int(text[5:-1]))
        raise ValueError(f"unknown monomial order {text!r}")

    def key(self):
        """The sympy order callable (monomial -> sortable key)."""
        return _order_key(self.kind, self.block)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key()(a), self.key()(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        if self.kind == OrderKind.ELIMINATION:
            return f"elim({self.block})"
        if self.kind == OrderKind.GREVLEX_LAST:
            return f"grevlex-last({self.block})"
        return self.kind.value


class GrevlexLastOrder(SympyMonomialOrder):
    """grevlex after moving one variable to the end."""

    is_global = True

    def __init__(self, index: int):
        self.index = index

    def __call__(self, monomial):
        i = self.index
        return grevlex(monomial[:i] + monomial[i + 1:] + monomial[i:i + 1])

    def __eq__(self, other):
        return isinstance(other, GrevlexLastOrder) and other.index == self.index

    def __hash__(self):
        return hash((GrevlexLastOrder, self.index))

    def __str__(self):
        return f"grevlex-last({self.index})"


@lru_cache(maxsize=None)
def _order_key(kind: OrderKind, block: int):
    if kind == OrderKind.LEX:
        return lex
    if kind == OrderKind.GRLEX:
        return grlex
    if kind == OrderKind.GREVLEX:
        return grevlex
    if kind == OrderKind.GREVLEX_LAST:
        return GrevlexLastOrder(block)
    return ProductOrder(
        (grevlex, itemgetter(slice(0, block))),
        (grevlex, itemgetter(slice(block, None))),
    )


# ===== Rings =====

class RingSpec(BaseModel):
    """
    A polynomial ring k[x_1..x_d] with a default monomial order.

    Two specs describe the same ring when field and variables agree; the
    order only selects how terms are listed and which order GB computations
    default to.
    """

    model_config = ConfigDict(frozen=True)

    field: CoefficientField = Field(default_factory=CoefficientField, description="Coefficient field")
    variables: Tuple[str, ...] = Field(description="Ordered variable names")
    order: MonomialOrder = Field(default_factory=MonomialOrder, description="Default monomial order")

    @field_validator("variables")
    @classmethod
    def _check_variables(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        if not value:
            raise ValueError("a ring needs at least one variable")
        if any(not name for name in value):
            raise ValueError("variable names must be nonempty")
        if len(set(value)) != len(value):
            raise ValueError("variable names must be distinct")
        return value

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        return parse_ring(text)

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def same_ring(self, other: "RingSpec") -> bool:
        return self.field == other.field and self.variables == other.variables

    def require_same(self, other: "RingSpec") -> None:
        if not self.same_ring(other):
            raise RingMismatchError(f"ring mismatch: {self} vs {other}")

    def with_order(self, order: MonomialOrder) -> "RingSpec":
        if order == self.order:
            return self
        return self.model_copy(update={"order": order})

    def sympy_ring(self, order: Optional[MonomialOrder] = None) -> PolyRing:
        return _sympy_ring(self.field, self.variables, order or self.order)

    @property
    def domain(self):
        return self.field.domain()

    def extend(self, name: str = "t") -> "RingSpec":
        """Prepend a fresh variable (renamed with trailing underscores on a clash)."""
        while name in self.variables:
            name += "_"
        return RingSpec(field=self.field, variables=(name,) + self.variables, order=self.order)

    def drop_first(self, k: int = 1) -> "RingSpec":
        return RingSpec(field=self.field, variables=self.variables[k:], order=self.order)

    def gens(self) -> List["Poly"]:
        return [Poly(self, g) for g in self.sympy_ring().gens]

    def gen(self, name: str) -> "Poly":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise RingError(f"unknown variable {name!r} in {self}") from None
        return Poly(self, self.sympy_ring().gens[i])

    def zero(self) -> "Poly":
        return Poly(self, self.sympy_ring().zero)

    def one(self) -> "Poly":
        return Poly(self, self.sympy_ring().one)

    def constant(self, value) -> "Poly":
        ring = self.sympy_ring()
        return Poly(self, ring.ground_new(ring.domain.convert(value)))

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Poly":
        if len(exponents) != self.ngens or any(e < 0 for e in exponents):
            raise PreconditionError(f"bad exponent vector {tuple(exponents)} for {self}")
        return Poly.from_dict(self, {tuple(exponents): coeff})

    def parse_poly(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


@lru_cache(maxsize=None)
def _sympy_ring(field: CoefficientField, variables: Tuple[str, ...], order: MonomialOrder) -> PolyRing:
    return PolyRing([Symbol(name) for name in variables], field.domain(), order.key())


# ===== Polynomials =====

class Poly:
    """
    Sparse exact polynomial.

    Immutable: every operation returns a new Poly. Terms are listed in
    strictly descending order of the ring's monomial order.
    """

    __slots__ = ("ring", "rep", "_hash")

    def __init__(self, ring: RingSpec, rep):
        self.ring = ring
        self.rep = rep
        self._hash: Optional[int] = None

    @classmethod
    def from_dict(cls, ring: RingSpec, terms: Dict[Monomial, object]) -> "Poly":
        return cls(ring, ring.sympy_ring().from_dict(dict(terms)))

    # ----- inspection -----

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def __len__(self):
        return len(self.rep)

    def terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Monomial, object]]:
        """(monomial, coefficient) pairs, descending; coefficients are domain elements."""
        key = (order or self.ring.order).key()
        return sorted(self.rep.items(), key=lambda term: key(term[0]), reverse=True)

    def monomials(self, order: Optional[MonomialOrder] = None) -> List[Monomial]:
        return [m for m, _ in self.terms(order)]

    def coefficients(self, order: Optional[MonomialOrder] = None) -> list:
        """Coefficients as sympy numbers, in term order."""
        to_sympy = self.ring.domain.to_sympy
        return [to_sympy(c) for _, c in self.terms(order)]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        if not self.rep:
            raise PreconditionError("zero polynomial has no leading term")
        key = (order or self.ring.order).key()
        return max(self.rep, key=key)

    def leading_coefficient(self, order: Optional[MonomialOrder] = None):
        return self.rep[self.leading_monomial(order)]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.rep), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.rep}
        return len(degrees) <= 1

    def is_monomial(self) -> bool:
        return len(self.rep) == 1

    def is_constant(self) -> bool:
        return not self.rep or (len(self.rep) == 1 and not any(next(iter(self.rep))))

    def variables_used(self) -> Tuple[int, ...]:
        used = set()
        for m in self.rep:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(sorted(used))

    # ----- arithmetic -----

    def _coerce(self, other):
        if isinstance(other, Poly):
            self.ring.require_same(other.ring)
            if other.ring.order != self.ring.order:
                return other.rep.set_ring(self.rep.ring)
            return other.rep
        if isinstance(other, int):
            return self.rep.ring.ground_new(self.rep.ring.domain.convert(other))
        return None

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly(self.ring, self.rep + rep)

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly(self.ring, self.rep - rep)

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly(self.ring, rep - self.rep)

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Poly(self.ring, self.rep * rep)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(self.ring, -self.rep)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PreconditionError(f"exponent must be a non-negative integer, got {n!r}")
        return Poly(self.ring, self.rep ** n)

    def monic(self) -> "Poly":
        if not self.rep:
            return self
        lc = self.leading_coefficient()
        return Poly(self.ring, self.rep.quo_ground(lc))

    def exact_divide(self, other: "Poly") -> Optional["Poly"]:
        """Quotient when ``other`` divides ``self`` exactly, else None."""
        divisor = self._coerce(other)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        quotients, remainder = self.rep.div([divisor])
        if remainder:
            return None
        return Poly(self.ring, quotients[0])

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """
        Replace variable i by ``images[i]`` and expand.

        Raises:
            PreconditionError: Wrong number of images
            RingMismatchError: Images in different rings or over another field
        """
        if len(images) != self.ring.ngens:
            raise PreconditionError(f"expected {self.ring.ngens} images, got {len(images)}")
        target = images[0].ring
        for image in images[1:]:
            target.require_same(image.ring)
        if target.field != self.ring.field:
            raise RingMismatchError(f"cannot substitute {target.field} images into {self.ring.field}")

        sring = target.sympy_ring()
        reps = [image.rep if image.ring.order == target.order else image.rep.set_ring(sring) for image in images]
        powers: Dict[Tuple[int, int], object] = {}

        def power(i: int, e: int):
            if (i, e) not in powers:
                powers[(i, e)] = reps[i] ** e
            return powers[(i, e)]

        result = sring.zero
        for monom, coeff in self.rep.items():
            term = sring.ground_new(coeff)
            for i, e in enumerate(monom):
                if e:
                    term = term * power(i, e)
            result = result + term
        return Poly(target, result)

    # ----- ring changes -----

    def in_order(self, order: MonomialOrder):
        """The underlying sympy element in the ring sorted by ``order``."""
        if order == self.ring.order:
            return self.rep
        return self.rep.set_ring(self.ring.sympy_ring(order))

    def lift(self, extended: RingSpec, position: int = 0) -> "Poly":
        """Embed into a ring with extra variables starting at ``position``."""
        extra = extended.ngens - self.ring.ngens
        if extra < 0 or extended.field != self.ring.field:
            raise RingMismatchError(f"cannot lift {self.ring} into {extended}")
        pad = (0,) * extra
        terms = {m[:position] + pad + m[position:]: c for m, c in self.rep.items()}
        return Poly(extended, extended.sympy_ring().from_dict(terms))

    def restrict(self, smaller: RingSpec, k: int = 1) -> "Poly":
        """Drop the first ``k`` variables, which must not occur."""
        terms = {}
        for m, c in self.rep.items():
            if any(m[:k]):
                raise PreconditionError(f"{self} involves eliminated variables")
            terms[m[k:]] = c
        return Poly(smaller, smaller.sympy_ring().from_dict(terms))

    # ----- equality / display -----

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.same_ring(other.ring) and dict.__eq__(self.rep, other.rep)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.field, self.ring.variables, frozenset(self.rep.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.ring})"


def format_poly(p: Poly, order: Optional[MonomialOrder] = None) -> str:
    """Deterministic text: descending terms, unit coefficients suppressed, '*' and '^'."""
    if not p.rep:
        return "0"
    to_sympy = p.ring.domain.to_sympy
    names = p.ring.variables
    pieces: List[str] = []
    for monom, coeff in p.terms(order):
        value = to_sympy(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = f"{magnitude}*" + "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


# ===== Parsing entry points =====

def parse_ring(text: str, order: Optional[MonomialOrder] = None) -> RingSpec:
    """
    Parse ``"QQ[x,y]"`` or ``"Fp(32003)[x,y]"``.

    Raises:
        ParseError: Syntax error with position
        RingError: Duplicate variable or bad modulus
    """
    parsed = parse_ring_text(text)
    if parsed.field == "QQ":
        field = CoefficientField.rationals()
    else:
        field = CoefficientField.prime(parsed.modulus)
    return RingSpec(field=field, variables=parsed.variables, order=order or MonomialOrder.grevlex())


def parse_poly(ring: RingSpec, text: str) -> Poly:
    """
    Parse a polynomial in ``ring``.

    Raises:
        ParseError: Unknown variable, malformed exponent, coefficient not in field
    """
    parser = PolyParser(ring.sympy_ring(), ring.variables, modulus=ring.field.modulus)
    return Poly(ring, parser.parse(text))


def parse_polys(ring: RingSpec, texts: Iterable[str]) -> List[Poly]:
    return [parse_poly(ring, text) for text in texts]


def common_ring(polys: Sequence[Poly]) -> RingSpec:
    if not polys:
        raise PreconditionError("empty polynomial list has no ring")
    ring = polys[0].ring
    for p in polys[1:]:
        ring.require_same(p.ring)
    return ring


__all__ = [
    "Monomial",
    "monomial_degree",
    "monomial_div",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "FieldKind",
    "CoefficientField",
    "OrderKind",
    "MonomialOrder",
    "RingSpec",
    "Poly",
    "format_poly",
    "parse_ring",
    "parse_poly",
    "parse_polys",
    "common_ring",
]
