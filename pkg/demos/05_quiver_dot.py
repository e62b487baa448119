#!/usr/bin/env python3
"""Emit Graphviz DOT for a window of the repetition quiver.

Without a frieze the nodes are labelled (i, k); with one, each node shows
its value, reproducing the usual picture of a frieze written on the
quiver.  Render with e.g.:  dot -Tpng -O e8_window.gv
"""

from pathlib import Path

from friezes import DynkinType, emit_quiver_dot, e8_example_pattern

print("bare A2 window, columns 0..2:")
print(emit_quiver_dot(DynkinType.from_name("A2"), 0, 2))

dot = emit_quiver_dot(DynkinType.from_name("E8"), 0, 3, e8_example_pattern())
out = Path("e8_window.gv")
out.write_text(dot, encoding="utf-8")
print(f"E8 window with frieze values written to {out} "
      f"({dot.count('label=')} nodes, {dot.count('->')} arrows)")
