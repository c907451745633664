"""Descriptions of the tiny coefficient rings this library supports.

A FieldSpec records how elements of one ring are stored across bit planes:
how many planes an element occupies, which bit patterns are legal, how
patterns decode to residues, and an additive basis whose 0/1 coefficients
can be read straight off the planes.  The basis is what lets the
table-driven multiplier treat an arbitrary coefficient as a short stack of
binary row selections.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BasisElement:
    """One additive-basis component with its plane-level extraction rule.

    ``extract`` is ("plane", d) to read plane d, or ("xor", d, e) to read
    plane d XOR plane e.  Applied to a stored pattern it yields the 0/1
    coefficient of ``alpha`` in the element's basis decomposition.
    """

    alpha: int
    extract: tuple

    def coefficient(self, pattern: int) -> int:
        if self.extract[0] == "plane":
            return (pattern >> self.extract[1]) & 1
        _, d, e = self.extract
        return ((pattern >> d) ^ (pattern >> e)) & 1


@dataclass(frozen=True)
class FieldSpec:
    """A small field or ring stored as ``bits`` parallel bit planes.

    decode maps an r-bit pattern to a residue (None marks an illegal
    pattern); canonical maps a residue to its preferred pattern.  For
    fields with redundant patterns (f5, f7) several patterns share a
    residue and reduction picks the canonical one.
    """

    name: str
    order: int
    char: int
    bits: int
    decode_table: tuple
    canonical_table: tuple
    basis: tuple
    is_field: bool = True

    @property
    def valid_patterns(self) -> frozenset:
        return frozenset(
            p for p, e in enumerate(self.decode_table) if e is not None
        )

    def decode(self, pattern: int) -> int:
        e = self.decode_table[pattern]
        if e is None:
            raise ValueError(f"invalid {self.name} pattern {pattern:#b}")
        return e

    def canonical(self, residue: int):
        if not 0 <= residue < self.order:
            raise ValueError(f"{residue} is not a residue of {self.name}")
        return self.canonical_table[residue]

    def basis_coefficients(self, pattern: int) -> tuple:
        return tuple(b.coefficient(pattern) for b in self.basis)

    def __repr__(self):
        return f"FieldSpec({self.name})"


F2 = FieldSpec(
    name="f2",
    order=2,
    char=2,
    bits=1,
    decode_table=(0, 1),
    canonical_table=(0, 1),
    basis=(BasisElement(1, ("plane", 0)),),
)

# Pattern bit 0 marks a unit (nonzero), bit 1 the sign: 0 -> 00, 1 -> 01,
# -1 -> 11.  Pattern 10 (sign without unit) is illegal.
F3 = FieldSpec(
    name="f3",
    order=3,
    char=3,
    bits=2,
    decode_table=(0, 1, None, 2),
    canonical_table=(0, 1, 3),
    basis=(
        BasisElement(1, ("xor", 0, 1)),   # unit and not negative
        BasisElement(2, ("plane", 1)),    # -1 component
    ),
)

F5 = FieldSpec(
    name="f5",
    order=5,
    char=5,
    bits=3,
    decode_table=(0, 1, 2, 3, 4, 0, 1, 2),
    canonical_table=(0, 1, 2, 3, 4),
    basis=(
        BasisElement(1, ("plane", 0)),
        BasisElement(2, ("plane", 1)),
        BasisElement(4, ("plane", 2)),
    ),
)

F7 = FieldSpec(
    name="f7",
    order=7,
    char=7,
    bits=3,
    decode_table=(0, 1, 2, 3, 4, 5, 6, 0),
    canonical_table=(0, 1, 2, 3, 4, 5, 6),
    basis=(
        BasisElement(1, ("plane", 0)),
        BasisElement(2, ("plane", 1)),
        BasisElement(4, ("plane", 2)),
    ),
)

Z4 = FieldSpec(
    name="z4",
    order=4,
    char=4,
    bits=2,
    decode_table=(0, 1, 2, 3),
    canonical_table=(0, 1, 2, 3),
    basis=(
        BasisElement(1, ("plane", 0)),
        BasisElement(2, ("plane", 1)),
    ),
    is_field=False,
)

Z8 = FieldSpec(
    name="z8",
    order=8,
    char=8,
    bits=3,
    decode_table=(0, 1, 2, 3, 4, 5, 6, 7),
    canonical_table=(0, 1, 2, 3, 4, 5, 6, 7),
    basis=(
        BasisElement(1, ("plane", 0)),
        BasisElement(2, ("plane", 1)),
        BasisElement(4, ("plane", 2)),
    ),
    is_field=False,
)

FIELDS = {f.name: f for f in (F2, F3, F5, F7, Z4, Z8)}


def by_name(name: str) -> FieldSpec:
    try:
        return FIELDS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown field {name!r}") from None


@dataclass(frozen=True)
class ExtFieldSpec:
    """An extension of a prime base field as a quotient by a monic polynomial.

    ``modulus`` lists the defining polynomial's coefficients low degree
    first, including the leading 1.  Elements are degree-vectors of base
    residues; matrices over the extension are degree-vectors of base
    matrices.
    """

    name: str
    base: FieldSpec
    degree: int
    modulus: tuple

    def __post_init__(self):
        if self.degree not in (2, 3):
            raise ValueError("only quadratic and cubic extensions supported")
        if len(self.modulus) != self.degree + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of the stated degree")
        if not self.base.is_field:
            raise ValueError("extension base must be a field")
        p = self.base.order
        if any(not 0 <= c < p for c in self.modulus):
            raise ValueError("modulus coefficients must be canonical residues")
        # For degree 2 or 3, irreducible over F_p iff there is no root.
        for x in range(p):
            if sum(c * x**k for k, c in enumerate(self.modulus)) % p == 0:
                raise ValueError(
                    f"{self.modulus} has root {x} mod {p}: not irreducible"
                )

    @property
    def order(self) -> int:
        return self.base.order ** self.degree

    def canonical_element(self, coeffs) -> tuple:
        if len(coeffs) != self.degree:
            raise ValueError(f"need {self.degree} coefficients")
        return tuple(c % self.base.order for c in coeffs)

    def __repr__(self):
        return f"ExtFieldSpec({self.name})"


F4 = ExtFieldSpec("f4", F2, 2, (1, 1, 1))        # x^2 + x + 1
F8 = ExtFieldSpec("f8", F2, 3, (1, 1, 0, 1))     # x^3 + x + 1
F9 = ExtFieldSpec("f9", F3, 2, (1, 0, 1))        # x^2 + 1
F25 = ExtFieldSpec("f25", F5, 2, (3, 0, 1))      # x^2 - 2
F27 = ExtFieldSpec("f27", F3, 3, (1, 2, 0, 1))   # x^3 - x + 1

EXT_FIELDS = {f.name: f for f in (F4, F8, F9, F25, F27)}


def ext_by_name(name: str) -> ExtFieldSpec:
    try:
        return EXT_FIELDS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown extension field {name!r}") from None


def any_by_name(name: str):
    """Look up a base or extension field by CLI name."""
    key = name.lower()
    if key in FIELDS:
        return FIELDS[key]
    if key in EXT_FIELDS:
        return EXT_FIELDS[key]
    raise ValueError(f"unknown field {name!r}")
