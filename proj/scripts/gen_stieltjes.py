#!/usr/bin/env python3
"""Regenerates include/zetalab/detail/stieltjes_constants.hpp with mpmath."""
import sys
import mpmath as mp

COUNT = 60
mp.mp.dps = 50

out = [
    "// Generated by scripts/gen_stieltjes.py (mpmath, 50 digits). Do not edit.",
    "#pragma once",
    "",
    "#include <array>",
    "",
    "namespace zetalab::detail {",
    "",
    f"inline constexpr std::array<long double, {COUNT}> stieltjes_gamma = {{",
]
for n in range(COUNT):
    out.append(f"    {mp.nstr(mp.stieltjes(n), 30, min_fixed=1, max_fixed=0)}L,")
out += ["};", "", "}  // namespace zetalab::detail", ""]
sys.stdout.write("\n".join(out))
