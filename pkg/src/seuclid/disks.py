"""Geometric certificates for the exceptional cases.

Disk covers of the fundamental domain with radii 1/c or sqrt(p)/c
(radius boost under congruence conditions), verified by exact
parallelogram subdivision with adaptive refinement, plus the symbolic
gap-line verifier used for d = 10 and d = 15.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .covering import Residual, residual
from .exact import QuadSurd, SSet, s_part_strip
from .field import KElement, QuadField, denom_s, make_field, s_norm

__all__ = [
    "Disk",
    "DiskCertificate",
    "BoundPiece",
    "PointPiece",
    "GapLineCert",
    "ExceptionalBundle",
    "NotExceptional",
    "CertificationError",
    "EXCEPTIONAL_PAIRS",
    "boost_radius",
    "verify_disk_cert",
    "find_uncovered_cell",
    "verify_gap_line",
    "verify_exceptional_bundle",
    "certify_exceptional",
    "table_disk_certificate",
    "gap_line_certificate",
]

EXCEPTIONAL_PAIRS = {(10, 2), (15, 3), (15, 5), (35, 5), (35, 7)}


class CertificationError(Exception):
    """A built-in certificate failed verification (implementation bug or
    transcription error)."""


@dataclass(frozen=True)
class Disk:
    """Open disk |xi - center| < sqrt(r_squared) with an O_S center."""

    center: KElement
    r_squared: Fraction
    boosted: bool


@dataclass(frozen=True)
class DiskCertificate:
    d: int
    s: SSet
    disks: tuple[Disk, ...]
    subdivision_depth: int


def boost_radius(fld: QuadField, s: SSet, alpha: KElement) -> Fraction:
    """Squared radius afforded to the disk at alpha: p/c^2 when the
    congruence conditions hold (p odd, p | d, half-integer basis,
    c = 0, b != 0, 2a+b = 0 mod p), else 1/c^2."""
    c = denom_s(alpha, s)
    if len(s) == 1:
        (p,) = s.primes
        if (
            p != 2
            and fld.half_basis
            and fld.d % p == 0
            and c % p == 0
            and alpha.b % p != 0
            and (2 * alpha.a + alpha.b) % p == 0
        ):
            return Fraction(p, c * c)
    return Fraction(1, c * c)


def _corner_inside(fld: QuadField, disk: Disk, iu: int, iv: int, den: int) -> bool:
    """Is the point (iu/den) + (iv/den)*w strictly inside the disk?
    Pure integer comparison of squared distances."""
    a, b, c = disk.center.a, disk.center.b, disk.center.c
    su = iu * c - a * den
    tv = iv * c - b * den
    if fld.half_basis:
        q = su * su + su * tv + ((1 + fld.d) // 4) * tv * tv
    else:
        q = su * su + fld.d * tv * tv
    m2 = den * den * c * c
    r = disk.r_squared
    return q * r.denominator < r.numerator * m2


def _cell_covered(fld: QuadField, disks: tuple[Disk, ...], iu: int, iv: int, den: int, depth: int) -> bool:
    """Corner check (squared distance is convex, so corner membership is
    sound for the whole cell), with 4-way splitting on failure."""
    for disk in disks:
        if all(
            _corner_inside(fld, disk, iu + du, iv + dv, den)
            for du in (0, 1)
            for dv in (0, 1)
        ):
            return True
    if depth <= 0:
        return False
    iu2, iv2, den2 = 2 * iu, 2 * iv, 2 * den
    return all(
        _cell_covered(fld, disks, iu2 + du, iv2 + dv, den2, depth - 1)
        for du in (0, 1)
        for dv in (0, 1)
    )


def find_uncovered_cell(
    cert: DiskCertificate, max_refine: int = 4
) -> tuple[int, int, int] | None:
    """First subdivision cell not strictly inside any disk, as
    (iu, iv, den) with the cell spanning [iu/den, (iu+1)/den] in each
    basis coordinate; None when the disks cover F."""
    n = cert.subdivision_depth
    if n < 1:
        raise ValueError("subdivision_depth must be positive")
    fld = cert.disks[0].center.field if cert.disks else make_field(cert.d)
    # per-disk corner membership over the (n+1) x (n+1) grid
    grids = []
    for disk in cert.disks:
        grids.append(
            [[_corner_inside(fld, disk, iu, iv, n) for iv in range(n + 1)] for iu in range(n + 1)]
        )
    order = list(range(len(cert.disks)))
    for iu in range(n):
        for iv in range(n):
            hit = None
            for idx in order:
                g = grids[idx]
                if g[iu][iv] and g[iu + 1][iv] and g[iu][iv + 1] and g[iu + 1][iv + 1]:
                    hit = idx
                    break
            if hit is not None:
                # try the last successful disk first for the next cell
                order.remove(hit)
                order.insert(0, hit)
                continue
            if not _cell_covered(fld, cert.disks, iu, iv, n, max_refine):
                return (iu, iv, n)
    return None


def verify_disk_cert(cert: DiskCertificate, max_refine: int = 4) -> bool:
    """True iff every subdivision cell of F lies strictly inside one of
    the disks (splitting failing cells up to max_refine times)."""
    return find_uncovered_cell(cert, max_refine) is None


@dataclass(frozen=True)
class BoundPiece:
    """One alpha whose S-norm distance to points xi = x + y0*w on the gap
    line is bounded by the quadratic a2*x^2 + a1*x + a0, below 1 on the
    claimed x-interval."""

    alpha: KElement
    a2: Fraction
    a1: Fraction
    a0: Fraction
    lo: QuadSurd
    hi: QuadSurd
    lo_closed: bool
    hi_closed: bool

    def bound_at(self, x: QuadSurd) -> QuadSurd:
        return x * x * self.a2 + x * self.a1 + self.a0


@dataclass(frozen=True)
class PointPiece:
    """An explicit alpha for a single point x on the gap line, checked by
    exact S-norm evaluation."""

    x: Fraction
    alpha: KElement


@dataclass(frozen=True)
class GapLineCert:
    """Certificate that every K-point on the horizontal line y = y0 of F
    admits an alpha with S-norm distance below 1."""

    y0: Fraction
    pieces: tuple[BoundPiece | PointPiece, ...]


def _line_point(fld: QuadField, x: Fraction, y0: Fraction) -> KElement:
    den = x.denominator * y0.denominator
    return KElement(
        x.numerator * y0.denominator, y0.numerator * x.denominator, den, fld
    )


def _covers_closed_unit(
    intervals: list[tuple[QuadSurd, QuadSurd, bool, bool]], points: list[QuadSurd]
) -> bool:
    """Do the intervals (with open/closed endpoint flags) plus isolated
    points cover the closed interval [0, 1]?"""
    one = QuadSurd(Fraction(1))

    def covered(x: QuadSurd) -> bool:
        if any(pt == x for pt in points):
            return True
        for lo, hi, lc, hc in intervals:
            if (lo < x or (lc and lo == x)) and (x < hi or (hc and x == hi)):
                return True
        return False

    pos = QuadSurd(Fraction(0))
    for _ in range(2 * len(intervals) + 2):
        if not covered(pos):
            return False
        if pos >= one:
            return True
        ext = None
        for lo, hi, _lc, _hc in intervals:
            if lo <= pos < hi and (ext is None or hi > ext):
                ext = hi
        if ext is None:
            return False
        pos = ext
    return False


def verify_gap_line(fld: QuadField, s: SSet, cert: GapLineCert) -> bool:
    """Verify every piece symbolically, then check the x-intervals and
    point checks cover [0, 1].

    Bound pieces must be convex (a2 >= 0), so the maximum over the
    claimed interval sits at an endpoint: closed endpoints need the
    bound strictly below 1, open endpoints allow equality.
    """
    if not cert.pieces:
        return False
    if s_part_strip(cert.y0.denominator, s) != cert.y0.denominator:
        return False  # y0 denominator must be coprime to S
    intervals: list[tuple[QuadSurd, QuadSurd, bool, bool]] = []
    points: list[QuadSurd] = []
    for piece in cert.pieces:
        if isinstance(piece, PointPiece):
            xi = _line_point(fld, piece.x, cert.y0)
            if s_norm(xi - piece.alpha, s) >= 1:
                return False
            points.append(QuadSurd(piece.x))
            continue
        denom_s(piece.alpha, s)  # alpha must be an S-integer
        if piece.a2 < 0:
            return False
        if not piece.lo < piece.hi:
            return False
        for endpoint, closed in ((piece.lo, piece.lo_closed), (piece.hi, piece.hi_closed)):
            value = piece.bound_at(endpoint)
            if closed:
                if not value < 1:
                    return False
            else:
                if not value <= 1:
                    return False
        intervals.append((piece.lo, piece.hi, piece.lo_closed, piece.hi_closed))
    return _covers_closed_unit(intervals, points)


# --- built-in certificates -------------------------------------------------

# d = 35: centers (a, b, c) by radius class; the boosted rows satisfy the
# congruence conditions and get squared radius p/c^2
_TABLE_35_5 = {
    "unit": [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)],
    "plain": [(1, 2, 5), (2, 2, 5), (3, 3, 5), (4, 3, 5)],
    "boosted": [(2, 1, 5), (-1, 2, 5), (6, 3, 5), (3, 4, 5), (4, 2, 5), (1, 3, 5)],
}
_TABLE_35_7 = {
    "unit": [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)],
    "plain": [
        (3, 2, 7),
        (5, 3, 7),
        (6, 3, 7),
        (7, 3, 7),
        (0, 4, 7),
        (1, 4, 7),
        (2, 4, 7),
        (5, 5, 7),
    ],
    "boosted": [
        (3, 1, 7),
        (-1, 2, 7),
        (6, 2, 7),
        (2, 3, 7),
        (5, 4, 7),
        (1, 5, 7),
        (8, 5, 7),
        (4, 6, 7),
    ],
}


def table_disk_centers(p: int) -> dict[str, list[tuple[int, int, int]]]:
    if p == 5:
        return _TABLE_35_5
    if p == 7:
        return _TABLE_35_7
    raise ValueError(f"no built-in disk table for p = {p}")


def table_disk_certificate(p: int, subdivision_depth: int = 125) -> DiskCertificate:
    """The built-in 14-disk (p=5) or 20-disk (p=7) cover of F for d = 35."""
    fld = make_field(35)
    s = SSet.of(p)
    disks = []
    for rows in table_disk_centers(p).values():
        for a, b, c in rows:
            alpha = KElement(a, b, c, fld)
            r2 = boost_radius(fld, s, alpha)
            disks.append(Disk(center=alpha, r_squared=r2, boosted=r2 > Fraction(1, alpha.c**2)))
    return DiskCertificate(d=35, s=s, disks=tuple(disks), subdivision_depth=subdivision_depth)


def gap_line_certificate(d: int, p: int) -> GapLineCert:
    """The built-in gap-line certificate for (10, 2) or (15, 3)/(15, 5)."""
    fld = make_field(d)
    half = Fraction(1, 2)
    if (d, p) == (10, 2):
        # line y = 1/3; for x = r/s with s odd the S-norms are exactly
        # 2x^2+5/9 (alpha=w/2), 2(1-x)^2+5/9 (alpha=(2+w)/2) and
        # 8(x-1/2)^2+5/9 (alpha=(2+w)/4)
        root2_3 = QuadSurd(Fraction(0), Fraction(1, 3), 2)  # sqrt(2)/3
        root2_6 = QuadSurd(Fraction(0), Fraction(1, 6), 2)  # sqrt(2)/6
        zero = QuadSurd(Fraction(0))
        one = QuadSurd(Fraction(1))
        return GapLineCert(
            y0=Fraction(1, 3),
            pieces=(
                BoundPiece(
                    alpha=KElement(0, 1, 2, fld),
                    a2=Fraction(2), a1=Fraction(0), a0=Fraction(5, 9),
                    lo=zero, hi=root2_3, lo_closed=True, hi_closed=False,
                ),
                BoundPiece(
                    alpha=KElement(2, 1, 2, fld),
                    a2=Fraction(2), a1=Fraction(-4), a0=Fraction(2) + Fraction(5, 9),
                    lo=one - root2_3, hi=one, lo_closed=False, hi_closed=True,
                ),
                BoundPiece(
                    alpha=KElement(2, 1, 4, fld),
                    a2=Fraction(8), a1=Fraction(-8), a0=Fraction(2) + Fraction(5, 9),
                    lo=QuadSurd(half) - root2_6, hi=QuadSurd(half) + root2_6,
                    lo_closed=False, hi_closed=False,
                ),
            ),
        )
    if d == 15 and p in (3, 5):
        # line y = 1/2; N(x + w/2 - w) = (x-1/4)^2 + 15/16 and
        # N(x + w/2 - 1) = (x-3/4)^2 + 15/16; the three line points with
        # bound exactly 1 get explicit alphas with S-norm 1/2
        point_alphas = {3: (1, 0, 2), 5: (-1, 2, 0)}[p]
        a_at_0, a_at_half, a_at_1 = point_alphas
        return GapLineCert(
            y0=half,
            pieces=(
                BoundPiece(
                    alpha=KElement(0, 1, 1, fld),
                    a2=Fraction(1), a1=Fraction(-1, 2), a0=Fraction(1),
                    lo=QuadSurd(Fraction(0)), hi=QuadSurd(half),
                    lo_closed=False, hi_closed=False,
                ),
                BoundPiece(
                    alpha=KElement(1, 0, 1, fld),
                    a2=Fraction(1), a1=Fraction(-3, 2), a0=Fraction(3, 2),
                    lo=QuadSurd(half), hi=QuadSurd(Fraction(1)),
                    lo_closed=False, hi_closed=False,
                ),
                PointPiece(x=Fraction(0), alpha=fld.element(a_at_0)),
                PointPiece(x=half, alpha=fld.element(a_at_half)),
                PointPiece(x=Fraction(1), alpha=fld.element(a_at_1)),
            ),
        )
    raise ValueError(f"no built-in gap-line certificate for ({d}, {p})")


@dataclass(frozen=True)
class ExceptionalBundle:
    """Residual evidence plus gap-line certificates for the cases where
    the interval family misses [0, 1] by finitely many points.

    gap_rationals is closed under y -> p*y (mod 1), which reduces every
    missed line to one carrying a certificate (scaling by p preserves
    the S-norm condition).
    """

    d: int
    p: int
    k_max: int
    gaps: Residual
    gap_rationals: tuple[Fraction, ...]
    gap_lines: tuple[GapLineCert, ...]


def verify_exceptional_bundle(bundle: ExceptionalBundle) -> bool:
    fld = make_field(bundle.d)
    s = SSet.of(bundle.p)
    gaps = residual(fld, s, bundle.k_max)
    if gaps != bundle.gaps:
        return False
    rationals = set(bundle.gap_rationals)
    # each residual gap contains exactly one of the claimed points, and
    # every claimed point lies in a gap
    seen = set()
    for lo, hi in gaps.gaps:
        inside = [
            y
            for y in rationals
            if lo.to_quadsurd() <= QuadSurd(y) <= hi.to_quadsurd()
        ]
        if len(inside) != 1:
            return False
        seen.add(inside[0])
    if seen != rationals:
        return False
    # closure under multiplication by p modulo 1, and every orbit must
    # reach a line carrying a certificate
    cert_lines = {cert.y0 for cert in bundle.gap_lines}
    for y in rationals:
        if (bundle.p * y) % 1 not in rationals:
            return False
        orbit = y
        for _ in range(len(rationals) + 1):
            if orbit in cert_lines:
                break
            orbit = (bundle.p * orbit) % 1
        else:
            return False
    return all(verify_gap_line(fld, s, cert) for cert in bundle.gap_lines)


@dataclass(frozen=True)
class NotExceptional:
    d: int
    p: int


def certify_exceptional(
    d: int, p: int
) -> DiskCertificate | ExceptionalBundle | NotExceptional:
    """Dispatch the five exceptional (d, p) pairs to their built-in
    certificates and verify them; anything else is NotExceptional."""
    if (d, p) not in EXCEPTIONAL_PAIRS:
        return NotExceptional(d, p)
    if d == 35:
        cert = table_disk_certificate(p)
        if not verify_disk_cert(cert):
            raise CertificationError(f"disk table for (35, {p}) failed verification")
        return cert
    fld = make_field(d)
    s = SSet.of(p)
    if d == 10:
        k_max, rationals = 64, (Fraction(1, 3), Fraction(2, 3))
    else:
        k_max, rationals = (81 if p == 3 else 125), (Fraction(1, 2),)
    bundle = ExceptionalBundle(
        d=d,
        p=p,
        k_max=k_max,
        gaps=residual(fld, s, k_max),
        gap_rationals=rationals,
        gap_lines=(gap_line_certificate(d, p),),
    )
    if not verify_exceptional_bundle(bundle):
        raise CertificationError(f"exceptional bundle for ({d}, {p}) failed verification")
    return bundle
