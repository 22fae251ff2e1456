from __future__ import annotations

from pathlib import Path

from afverify import Workbench
from afverify.verification import format_class, hierarchy_edges

DATA = Path(__file__).parent / "data"


def main() -> None:
    wb = Workbench.from_env()
    af = wb.load(DATA / "naive_f.apx")

    print("[vclass p,mp]")
    print(format_class(wb.vclass(af, "p,mp")), end="")

    print(f"[hierarchy] {len(hierarchy_edges())} covering edges")

    found = wb.verify("co", "+±", 2)
    if found is not None:
        print(f"[verify co under +±] {found.left_extensions} vs {found.right_extensions}")

    # Exhaustive over every AF with up to three arguments; takes a few seconds.
    for kind in ("stb", "ad", "co"):
        labels = [fn.label for fn in wb.exact(kind, 3)]
        print(f"[exact {kind}] {' '.join(labels)}")


if __name__ == "__main__":
    main()
