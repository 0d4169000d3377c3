#!/usr/bin/env python3
"""One-off helper: parse the LaTeX tables in ../paper.md into tests/table_data.hpp.

Kept in the repo so the fixture can be regenerated and audited, but the
generated header is committed and the build never runs this.
"""
import re
import sys

SRC = sys.argv[1] if len(sys.argv) > 1 else "paper.md"
OUT = sys.argv[2] if len(sys.argv) > 2 else "table_data.hpp"

text = open(SRC).read()

tables = re.findall(r"\\begin\{tabular\}.*?\\end\{tabular\}", text, re.S)
assert len(tables) == 2, f"expected 2 tabulars, found {len(tables)}"


def parse_rows(tab, ncols_roots):
    rows = []
    for line in tab.splitlines():
        line = line.strip()
        m = re.findall(r"\$\s*(-?\d+\.\d+)\s*\$\s*&\s*\$(.*?)\$", line)
        if not m:
            continue
        for energy, roots_s in m:
            roots = []
            # split on commas not inside \pm groups: \pm binds the next number
            parts = [p.strip() for p in roots_s.split(",")]
            for p in parts:
                p = p.replace("\\textit{i}", "i").replace("\\textit{ i}", "i")
                pm = re.match(r"^\s*(-?\d+\.\d+)\s*\\pm\s*(\d+\.\d+)\s*i\s*$", p)
                re_only = re.match(r"^\s*(-?\d+\.\d+)\s*$", p)
                if pm:
                    a, b = float(pm.group(1)), float(pm.group(2))
                    roots.append((a, b))
                    roots.append((a, -b))
                elif re_only:
                    roots.append((float(re_only.group(1)), 0.0))
                else:
                    raise ValueError(f"unparsed root token: {p!r} in line {line!r}")
            assert len(roots) == ncols_roots, (energy, roots)
            rows.append((float(energy), roots))
    return rows


t1 = parse_rows(tables[0], 3)
t2 = parse_rows(tables[1], 6)
assert len(t1) == 56, len(t1)
assert len(t2) == 28, len(t2)

# Table 1 is typeset as two side-by-side columns; sort globally by energy.
t1.sort(key=lambda r: r[0])
assert all(t1[i][0] < t1[i + 1][0] for i in range(len(t1) - 1))
assert all(t2[i][0] < t2[i + 1][0] for i in range(len(t2) - 1))

with open(OUT, "w") as f:
    f.write(
        """// Reference data for the L=8 benchmark runs at G = 1/2 + 1e-7, eps_j = j/10.
// Roots are the Moebius-transformed variables v_j as printed (5 or 8 decimals).
// Generated by extract_tables.py; do not edit by hand.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace refdata {

struct RefRow {
  double energy;
  std::vector<std::complex<double>> roots_v;
};

""")

    def emit(name, rows, n):
        f.write(f"inline const std::array<RefRow, {len(rows)}> {name} = {{{{\n")
        for e, roots in rows:
            rs = ", ".join(f"{{{a!r}, {b!r}}}" for a, b in roots)
            f.write(f"    {{{e!r}, {{{rs}}}}},\n")
        f.write("}};\n\n")

    emit("kTable1", t1, 3)
    emit("kTable2", t2, 6)
    f.write("}  // namespace refdata\n")

print(f"wrote {OUT}: {len(t1)} + {len(t2)} rows")
