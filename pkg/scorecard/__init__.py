from .cost_model import (CostExpr, UnitCosts, cost_eval, miller_cost,
                         pairing_cost, ratio_pairing_cost, scalar_mul_cost)
from .advantage import (ADVANTAGE_ORDER, AdvantageInputs, advantage_eval,
                        advantage_ranking, advantage_sample)
from .ranking import (RankMatrix, final_classification, load_rank_matrix,
                      property_classification, property_rank, rank_aggregate,
                      specific_classification)
from .boyen import boyen_table, boyen_targets
from .opcount import OpcountReport, expected_row, opcount_verify
from .symbolic import symbolic_rows
