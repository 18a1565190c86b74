"""Write the built-in section gallery as offsets files.

Usage: python scripts/generate_offsets.py [OUTDIR]

Each file is ready for `hullmap fit --input FILE --n N` or `hullmap search`.
"""

import sys
from pathlib import Path

from hullmap.section import serialize_offsets
from hullmap.shapes import (
    bulb_section,
    chine_section,
    circle_section,
    ellipse_section,
    fine_section,
    heeled_rectangle,
    rectangle_section,
    superellipse_section,
)

GALLERY = {
    "circle": lambda: circle_section(41),
    "ellipse": lambda: ellipse_section(41, breadth=4.0, draft=1.0),
    "superellipse": lambda: superellipse_section(41),
    "rectangle": lambda: rectangle_section(41, breadth=2.0, draft=1.0),
    "chine": lambda: chine_section(41),
    "fine": lambda: fine_section(41),
    "bulb": lambda: bulb_section(41),
    "heeled_rectangle": lambda: heeled_rectangle(21, heel_deg=15.0),
}


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, build in GALLERY.items():
        section = build()
        path = out_dir / f"{name}.txt"
        path.write_text(serialize_offsets(section))
        kind = "symmetric" if section.symmetric else "asymmetric"
        print(f"{path}  {len(section)} points  {kind}  B={section.breadth:g} D={section.draft:g}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
