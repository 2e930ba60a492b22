"""Colored interval graphs, unfoldings and annulus blocks, with bounded lemma checkers."""

from .annuli import (BlockLabel, Profile, RadiusLadder, classify_radius, compatible, extract_walk,
                     smallest_open_interval)
from .errors import *  # noqa: F401,F403
from .formulas import FormulaReport, check_sum_formula, check_within_arrow
from .graphs import (ColoredGraph, Reduction, ValidationReport, build_Gn, induced_subgraph,
                     validate_reduction)
from .oracles import Bounds, Campaign, CampaignReport, run_campaign
from .product import ProductGraph, coverage, coverage_report
from .render import render_annuli
from .sequences import (DeltaSequence, IndexSequence, Parity, TailKind, TailVerdict, block_parity,
                        delta, e_tail_check, generate_inequivalent_family, p_value)
from .unfoldings import (Case, SimRelation, Unfolding, Walk, base_unfolding, enumerate_unfoldings,
                         extend_unfolding, sim_relation)

__version__ = "0.1.0"
