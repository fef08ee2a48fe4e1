#!/usr/bin/env python3
"""Download and prepare the two public datasets the acceptance suite needs.

Produces, inside the destination directory (default: ``data/`` next to the
repository root):

* ``breast_cancer_wisconsin.csv``: the Breast Cancer Wisconsin (Original)
  file with a header row prepended.  The 16 ``?`` cells are kept verbatim;
  the strict CSV loader drops and counts those rows at load time.
* ``bike_sharing_hour.csv``: the hourly Bike Sharing file with the
  non-numeric ``dteday`` column removed, since the loader accepts purely
  numeric tables and would otherwise drop every row.

Needs outbound HTTPS to archive.ics.uci.edu.  If this machine has no
network, run the script elsewhere and copy the two output files in, or pass
--source-dir pointing at a directory that already holds the raw downloads
(``breast-cancer-wisconsin.data`` and ``hour.csv``).
"""

import argparse
import csv
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

BREAST_CANCER_URL = (
    "https://archive.ics.uci.edu/ml/machine-learning-databases/"
    "breast-cancer-wisconsin/breast-cancer-wisconsin.data"
)
BIKE_SHARING_URL = (
    "https://archive.ics.uci.edu/ml/machine-learning-databases/00275/"
    "Bike-Sharing-Dataset.zip"
)

BREAST_CANCER_HEADER = [
    "id",
    "ClumpThickness",
    "CellSize",
    "CellShape",
    "MarginalAdhesion",
    "SingleEpithelialCellSize",
    "BareNuclei",
    "BlandChromatin",
    "NormalNucleoli",
    "Mitoses",
    "CancerClass",
]


def download(url: str) -> bytes:
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as response:
        return response.read()


def prepare_breast_cancer(raw: bytes, dest: Path) -> None:
    lines = [line for line in raw.decode("utf-8").splitlines() if line.strip()]
    width = len(BREAST_CANCER_HEADER)
    for line in lines:
        if len(line.split(",")) != width:
            raise SystemExit(f"unexpected field count in row: {line!r}")
    out = dest / "breast_cancer_wisconsin.csv"
    out.write_text(",".join(BREAST_CANCER_HEADER) + "\n" + "\n".join(lines) + "\n")
    print(f"wrote {out} ({len(lines)} data rows)")


def prepare_bike_sharing(hour_csv: bytes, dest: Path) -> None:
    reader = csv.reader(io.StringIO(hour_csv.decode("utf-8")))
    rows = list(reader)
    header = rows[0]
    if "dteday" not in header:
        raise SystemExit(f"hour.csv header missing dteday: {header}")
    drop = header.index("dteday")
    out = dest / "bike_sharing_hour.csv"
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh)
        for row in rows:
            writer.writerow(row[:drop] + row[drop + 1 :])
    print(f"wrote {out} ({len(rows) - 1} data rows)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--dest",
        default=str(Path(__file__).resolve().parents[1] / "data"),
        help="output directory (default: the repository's data/)",
    )
    parser.add_argument(
        "--source-dir",
        help="directory holding already-downloaded breast-cancer-wisconsin.data "
        "and hour.csv; skips the network entirely",
    )
    args = parser.parse_args()

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)

    if args.source_dir:
        source = Path(args.source_dir)
        breast = (source / "breast-cancer-wisconsin.data").read_bytes()
        hour = (source / "hour.csv").read_bytes()
    else:
        try:
            breast = download(BREAST_CANCER_URL)
            archive = download(BIKE_SHARING_URL)
        except OSError as exc:
            print(
                f"error: download failed ({exc}); run this script on a machine "
                f"with access to archive.ics.uci.edu, or use --source-dir",
                file=sys.stderr,
            )
            return 1
        with zipfile.ZipFile(io.BytesIO(archive)) as zf:
            hour = zf.read("hour.csv")

    prepare_breast_cancer(breast, dest)
    prepare_bike_sharing(hour, dest)
    return 0


if __name__ == "__main__":
    sys.exit(main())
