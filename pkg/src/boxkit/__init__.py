"""Boxicity toolkit: gadget graphs, exact box-representation search, lemma checks."""

from .gadgets import GadgetSpec, build_gadget, embedded_subgadget
from .geometry import (BoxRepresentation, Interval, box_diff_hits, box_in_union, boxes_intersect,
                       corner_points, helly_witness, is_crossing_pair, make_box,
                       verify_representation)
from .graph import (Graph, add_pendant, is_2_tree, is_series_parallel, parse_graph,
                    serialize_graph, series_subdivide, split_edge)
from .render import render_svg
from .solver import Budget, compute_boxicity, decide_box_le, export_cnf, import_model
from .verify import check_lemma, check_theorem_decomposition, check_theorem_full

__version__ = "0.1.0"
