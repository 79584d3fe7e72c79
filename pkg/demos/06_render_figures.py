"""Render certificates as SVG figures.

Writes one figure per certificate kind into demos/out/.  Coordinates are
projected to floats only at drawing time; all certified geometry stays
exact.
"""
import pathlib

from seuclid import SSet, certify_euclidean, certify_exceptional, certify_non_euclidean, make_field
from seuclid.render import render_certificate

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

figures = {
    "cover_d5_s2.svg": certify_euclidean(make_field(5), SSet.of(2)),
    "cover_d67_s23.svg": certify_euclidean(make_field(67), SSet.of(2, 3)),
    "disks_d35_s7.svg": certify_exceptional(35, 7),
    "witness_d17_s2.svg": certify_non_euclidean(17, 2),
    "bundle_d10_s2.svg": certify_exceptional(10, 2),
}
for name, cert in figures.items():
    path = out / name
    path.write_text(render_certificate(cert))
    print(f"wrote {path}")
