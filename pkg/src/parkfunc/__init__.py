"""Cycle structure of uniformly random parking functions.

Exact counting and enumeration, parking-completion formulas, Abel-type
multinomial sums, cycle-count moments, an exchangeable-pair construction with
explicit discrepancy bounds, and total variation distances to a product-Poisson
reference — each exact path paired with a Monte Carlo path built on an exactly
uniform sampler.
"""
from .completions import (OccupiedVector, completions_count,
                          completions_count_block, completions_count_bruteforce,
                          completions_count_lattice)
from .distributions import (JointDistribution, empirical_joint_distribution,
                            exact_joint_distribution, poisson_pmf,
                            product_poisson_pmf, tv_distance,
                            tv_distance_to_poisson)
from .errors import GuardError, InternalConsistencyError
from .exact_math import (AbelSpec, abel_closed_all_minus_one,
                         abel_closed_last_zero, abel_sum, binomial,
                         format_exact, harmonic_number, multinomial,
                         parse_exact)
from .moments import (EnumeratedCycleMeans, KCycleEstimate, TotalCyclesStats,
                      asymptotic_k_cycle_mean, cycle_len_prob_bound,
                      enumeration_cycle_means, expected_fixed_points,
                      expected_k_cycles_exact, expected_k_cycles_mc,
                      expected_transpositions, total_cycles_stats)
from .parking import (ParkingOutcome, PrefSeq, count_parking_functions,
                      enumerate_parking_functions, is_parking_function,
                      sample_uniform, sample_uniform_batch,
                      satisfies_prefix_counts, simulate_parking)
from .stein import (SteinReport, SteinTermRecord, TransitionEvent,
                    bound_term_a, bound_term_b, classify_transition,
                    conditional_event_probs, stein_terms, transpose_entries,
                    tv_upper_bound)
from .structure import (CycleProfile, FunctionalGraph, cycle_length_at,
                        cycle_profile, functional_graph, path_length_at,
                        tail_length_at)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
