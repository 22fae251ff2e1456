from __future__ import annotations

from pathlib import Path

from afverify import Workbench
from afverify.formats import write_apx

DATA = Path(__file__).parent / "data"


def main() -> None:
    wb = Workbench.from_env()
    f = wb.load(DATA / "naive_f.apx")
    g = wb.load(DATA / "naive_g.apx")

    print("[k_na] kernel shared by both files:")
    print(write_apx(wb.kernel(f, "k_na")), end="")

    for kind in ("na", "stb", "co"):
        verdict = wb.equivalence(f, g, kind)
        state = "EQUIVALENT" if verdict.equivalent else "NOT"
        print(f"[equiv {kind}] {state} method={verdict.method}")
        if verdict.witness is not None:
            print(f"  witness attacks: {sorted(verdict.witness.attack_pairs())}")

    # sta has no kernel: the verdict comes from the bounded expansion search.
    sta = wb.load(DATA / "sta.tgf")
    verdict = wb.equivalence(sta, wb.kernel(sta, "stb"), "sta")
    print(f"[equiv sta vs k_stb] equivalent={verdict.equivalent} method={verdict.method}")


if __name__ == "__main__":
    main()
