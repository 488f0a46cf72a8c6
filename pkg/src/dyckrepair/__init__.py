"""Edit distance to balanced parenthesis strings (Dyck languages).

Exact references (cubic DP, brute force), randomized near-linear repair
(Random-deletion, block refinement, phased windows), gambler's-ruin
hitting-time analytics, and repair of stack / queue / priority-queue /
deque transcripts.
"""
from .core import (Delete, EditScript, Insert, ParenString, ParenSymbol, Polarity,
                   RepairResult, Substitute, apply_script, dyck1_distance,
                   dyck1_unmatched, is_well_formed, parse_compact, parse_script,
                   parse_tokens, render_compact, render_script, render_tokens)
from .errors import (BadParams, DyckError, EmptyTypeName, IndexOutOfRange,
                     MixedDecorations, NotDyck1, NotFound, ParseError,
                     PolarityViolation, ScriptError, SymbolOutOfAlphabet, TooLarge,
                     TranscriptSyntax, UnknownCharacter, WindowOverlap)
from .generate import gen_instance
from .memcheck import (Language, Transcript, TranscriptOp, brute_force_transcript_distance,
                       gen_transcript, parse_transcript, render_transcript, stack_to_dyck,
                       validate)
from .memcheck import repair as repair_transcript
from .oracle import brute_force_distance, dyck_deletion_dp, dyck_edit_dp
from .phased import epsilon_mode, repair_phased, segment_phase
from .preprocess import BlockDecomposition, decompose, greedy_match
from .randomdel import RdEvent, RdTrace, best_of, default_iterations, repair_random, run
from .randomwalk import (corollary_window, hitting_pmf, lower_bound_A, simulate,
                         window_prob)
from .refined import repair_refined
from .stredit import levenshtein, match_runs

__version__ = "0.1.0"
