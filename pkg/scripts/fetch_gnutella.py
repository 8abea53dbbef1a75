"""Download a SNAP Gnutella peer-to-peer snapshot into data/.

The graphs are listed at http://snap.stanford.edu/data/index.html; this
fetches https://snap.stanford.edu/data/p2p-Gnutella08.txt.gz by default.

    python scripts/fetch_gnutella.py            # Gnutella08
    python scripts/fetch_gnutella.py 05 09      # others by number
"""
import argparse
import gzip
import shutil
import urllib.request
from pathlib import Path

URL = "https://snap.stanford.edu/data/p2p-Gnutella{num}.txt.gz"
DATA = Path(__file__).resolve().parents[1] / "data"


def fetch(num, dest=DATA):
    dest.mkdir(exist_ok=True)
    target = dest / f"p2p-Gnutella{num}.txt"
    if target.exists():
        return target
    gz = target.with_suffix(".txt.gz")
    with urllib.request.urlopen(URL.format(num=num), timeout=60) as resp, open(gz, "wb") as fh:
        shutil.copyfileobj(resp, fh)
    with gzip.open(gz, "rb") as src, open(target, "wb") as out:
        shutil.copyfileobj(src, out)
    gz.unlink()
    return target


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("numbers", nargs="*", default=["08"])
    for num in ap.parse_args().numbers:
        print(fetch(num.zfill(2)))
