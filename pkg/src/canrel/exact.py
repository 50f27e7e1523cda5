"""Exact scalars for structure constants: Gaussian rationals with a sqrt(2) part.

Every coefficient that appears in the bracket tables or basis conversions is of
the form (a + b*sqrt(2)) where a and b are Gaussian rationals (complex numbers
with Fraction real/imag parts).  Arithmetic is exact, so Jacobi checking and
basis-change round trips carry no tolerance at all.
"""

from __future__ import annotations

from fractions import Fraction


class ExactC:
    """(re0 + i*im0) + (re1 + i*im1)*sqrt(2), all parts Fraction."""

    __slots__ = ("re0", "im0", "re1", "im1")

    def __init__(self, re0=0, im0=0, re1=0, im1=0):
        self.re0 = Fraction(re0)
        self.im0 = Fraction(im0)
        self.re1 = Fraction(re1)
        self.im1 = Fraction(im1)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(re, im=0) -> "ExactC":
        return ExactC(re, im)

    @staticmethod
    def sqrt2_times(re, im=0) -> "ExactC":
        return ExactC(0, 0, re, im)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ExactC") -> "ExactC":
        return ExactC(self.re0 + other.re0, self.im0 + other.im0,
                      self.re1 + other.re1, self.im1 + other.im1)

    def __sub__(self, other: "ExactC") -> "ExactC":
        return ExactC(self.re0 - other.re0, self.im0 - other.im0,
                      self.re1 - other.re1, self.im1 - other.im1)

    def __neg__(self) -> "ExactC":
        return ExactC(-self.re0, -self.im0, -self.re1, -self.im1)

    def __mul__(self, other: "ExactC") -> "ExactC":
        # (p + q s)(r + t s) = (pr + 2qt) + (pt + qr) s,  s = sqrt(2),
        # p,q,r,t Gaussian rationals.
        a, b = self.re0, self.im0
        c, d = self.re1, self.im1
        e, f = other.re0, other.im0
        g, h = other.re1, other.im1
        # p*r = (a+bi)(e+fi)
        pr_re, pr_im = a * e - b * f, a * f + b * e
        qt_re, qt_im = c * g - d * h, c * h + d * g
        pt_re, pt_im = a * g - b * h, a * h + b * g
        qr_re, qr_im = c * e - d * f, c * f + d * e
        return ExactC(pr_re + 2 * qt_re, pr_im + 2 * qt_im,
                      pt_re + qr_re, pt_im + qr_im)

    def conjugate(self) -> "ExactC":
        return ExactC(self.re0, -self.im0, self.re1, -self.im1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactC):
            return NotImplemented
        return (self.re0 == other.re0 and self.im0 == other.im0
                and self.re1 == other.re1 and self.im1 == other.im1)

    def __hash__(self):
        return hash((self.re0, self.im0, self.re1, self.im1))

    def is_zero(self) -> bool:
        return not (self.re0 or self.im0 or self.re1 or self.im1)

    # -- views -------------------------------------------------------------

    def to_complex(self) -> complex:
        s = 2 ** 0.5
        return complex(float(self.re0) + float(self.re1) * s,
                       float(self.im0) + float(self.im1) * s)

    def sqrt2_split(self):
        """Return (re, im, pow) with value = (re + i*im)*sqrt(2)**pow.

        Raises ValueError when the rational and sqrt(2) parts are both
        nonzero (never happens for built-in table constants).
        """
        plain = self.re0 or self.im0
        surd = self.re1 or self.im1
        if plain and surd:
            raise ValueError("mixed rational + sqrt2 coefficient")
        if surd:
            return self.re1, self.im1, 1
        return self.re0, self.im0, 0

    def __repr__(self):
        parts = []
        if self.re0 or self.im0:
            parts.append(f"({self.re0}{'+' if self.im0 >= 0 else ''}{self.im0}i)")
        if self.re1 or self.im1:
            parts.append(f"({self.re1}{'+' if self.im1 >= 0 else ''}{self.im1}i)*sqrt2")
        return " + ".join(parts) if parts else "0"


ZERO = ExactC()
ONE = ExactC(1)
MINUS_ONE = ExactC(-1)
I_UNIT = ExactC(0, 1)
MINUS_I = ExactC(0, -1)
HALF = ExactC(Fraction(1, 2))
# 1/sqrt(2) = sqrt(2)/2
INV_SQRT2 = ExactC(0, 0, Fraction(1, 2))
I_INV_SQRT2 = ExactC(0, 0, 0, Fraction(1, 2))
