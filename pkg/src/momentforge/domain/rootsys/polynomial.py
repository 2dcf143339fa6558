from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Any, Iterator, Mapping

Monomial = tuple[int, int]


@dataclass(frozen=True)
class Polynomial2:
    """Sparse polynomial in two variables with exact rational coefficients.

    Zero coefficients are never stored, so equality of the ``terms`` maps is
    equality of polynomials.
    """

    terms: Mapping[Monomial, Q] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {exp: Q(c) for exp, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def constant(cls, value: object) -> "Polynomial2":
        return cls({(0, 0): Q(value)})  # type: ignore[arg-type]

    @classmethod
    def linear(cls, a: object, b: object, c: object = 0) -> "Polynomial2":
        """a*x + b*y + c"""
        return cls({(1, 0): Q(a), (0, 1): Q(b), (0, 0): Q(c)})  # type: ignore[arg-type]

    @classmethod
    def x(cls) -> "Polynomial2":
        return cls({(1, 0): Q(1)})

    @classmethod
    def y(cls) -> "Polynomial2":
        return cls({(0, 1): Q(1)})

    def __iter__(self) -> Iterator[tuple[Monomial, Q]]:
        return iter(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial2):
            return dict(self.terms) == dict(other.terms)
        if isinstance(other, (int, Q)):
            return dict(self.terms) == dict(Polynomial2.constant(other).terms)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def _coerce(self, other: Any) -> "Polynomial2":
        if isinstance(other, Polynomial2):
            return other
        return Polynomial2.constant(other)

    def __add__(self, other: Any) -> "Polynomial2":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Q(0)) + c
        return Polynomial2(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial2":
        return Polynomial2({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Polynomial2":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial2":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Polynomial2":
        other = self._coerce(other)
        out: dict[Monomial, Q] = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, Q(0)) + c * d
        return Polynomial2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial2":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Any, y: Any) -> Any:
        total: Any = 0
        for (i, j), c in self.terms.items():
            coeff = c if isinstance(x, Q) or isinstance(x, int) else float(c)
            total = total + coeff * x**i * y**j
        return total

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {i + j for i, j in self.terms}
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def substitute(self, px: "Polynomial2", py: "Polynomial2") -> "Polynomial2":
        """Compose: f(px(s, t), py(s, t))."""

        result = Polynomial2()
        x_powers = [Polynomial2.constant(1)]
        y_powers = [Polynomial2.constant(1)]
        for _ in range(self.degree):
            x_powers.append(x_powers[-1] * px)
            y_powers.append(y_powers[-1] * py)
        for (i, j), c in self.terms.items():
            result = result + x_powers[i] * y_powers[j] * c
        return result

    def coefficient(self, i: int, j: int) -> Q:
        return self.terms.get((i, j), Q(0))

    def to_sympy(self):  # pragma: no cover - thin adapter for symbolic checks
        import sympy

        x, y = sympy.symbols("x y")
        return sympy.Add(
            *(sympy.Rational(c.numerator, c.denominator) * x**i * y**j for (i, j), c in self.terms.items())
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial2(0)"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), item[0])):
            mono = "*".join(p for p in (f"x^{i}" if i else "", f"y^{j}" if j else "") if p)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return "Polynomial2(" + " + ".join(parts) + ")"
