#!/usr/bin/env python3
# Copyright 2026 The knotdensity Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerate data/census12.csv from the Hoste-Thistlethwaite knot tables.

Requires SnapPy (pip install snappy). Each row carries the table DT code,
the alternating flag, the determinant (order of the torsion of H_1 of the
2-fold cyclic cover of the exterior) and the hyperbolic volume (0 for
non-hyperbolic knots).
"""
import argparse
import csv
import sys
import warnings

warnings.filterwarnings("ignore")
import snappy  # noqa: E402


def determinant(manifold):
    cover = manifold.covers(2, cover_type="cyclic")[0]
    det = 1
    for coeff in cover.homology().elementary_divisors():
        if coeff != 0:
            det *= coeff
    return det


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-crossings", type=int, default=12)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "crossings", "dt", "alternating", "determinant", "volume"])
    for c in range(3, args.max_crossings + 1):
        for m in snappy.HTLinkExteriors(knots_vs_links="knots", crossings=c):
            name = m.name().split("(")[0]
            dt = m.link().DT_code()[0]
            alternating = name[len(str(c)) + 1] == "a"
            if m.solution_type() == "all tetrahedra positively oriented":
                volume = "%.10f" % float(m.volume())
            else:
                volume = "0"
            writer.writerow([name, c, " ".join(str(x) for x in dt),
                             "true" if alternating else "false",
                             determinant(m), volume])
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
