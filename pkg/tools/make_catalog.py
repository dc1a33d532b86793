"""Regenerate the shipped graph6 catalogs of small connected graphs."""

from pathlib import Path

from coverreg.graph import connected_graphs

DATA = Path(__file__).resolve().parents[1] / "src" / "coverreg" / "data"


def main():
    upto = []
    for n in range(1, 7):
        records = [g.to_graph6() for g in connected_graphs(n)]
        (DATA / f"connected{n}.g6").write_text("".join(r + "\n" for r in records))
        upto += records
    (DATA / "connected_upto6.g6").write_text("".join(r + "\n" for r in upto))


if __name__ == "__main__":
    main()
