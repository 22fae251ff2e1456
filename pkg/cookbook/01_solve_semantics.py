from __future__ import annotations

from pathlib import Path

from afverify import SemanticsKind, Workbench
from afverify.formats import format_extensions

DATA = Path(__file__).parent / "data"


def main() -> None:
    wb = Workbench.from_env()
    af = wb.load(DATA / "naive_f.apx")
    print(f"[load] args={list(af.names)} attacks={sorted(af.attack_pairs())}")

    for kind in SemanticsKind:
        ext = wb.solve(af, kind)
        print(f"[{kind.value}] " + format_extensions(ext, iccma=True).strip())

    # TGF input; sta sits between stable and stage.
    sta = wb.load(DATA / "sta.tgf")
    for kind in ("stb", "sta", "stg"):
        print(f"[sta.tgf {kind}] " + format_extensions(wb.solve(sta, kind), iccma=True).strip())


if __name__ == "__main__":
    main()
