"""Exact computations on finite digital images: continuity, homotopy,
rigidity, reducibility, freezing sets and cold sets."""

__version__ = "0.1.0"

from .lattice import (CU, NP, UNREACHABLE, DigitalImage, Explicit, adjacent, boundary,
                      build_image, closed_neighborhood, components, geodesic_distance,
                      is_connected, is_simple_closed_curve, unique_shortest_path)
from .constructors import (AxisPermutation, Reflection, Translation, box, cycle_graph,
                           find_wedge_embedding, interval, lattice_symmetry, product, ring,
                           simple_closed_curve, wedge)
from .maps import (ImageMap, MapConstraints, Mode, SearchBudget, SearchOutcome, Verdict,
                   compose, constant, enumerate_continuous_self_maps, find_continuous_map,
                   identity, is_continuous, is_isomorphism, is_n_map, iter_continuous_maps,
                   map_profile)
from .homotopy import (Homotopy, are_homotopic, homotopy_component, is_reducible,
                       is_reducible_bfs, is_rigid, is_rigid_bfs, one_step_homotopic)
from .fixedpoint import (PinRole, PinSet, cold_sets_audit, is_freezing, is_s_cold,
                         minimize_freezing)
from .documents import DocumentError, parse_image_document, serialize
from .render import render_svg, render_text
