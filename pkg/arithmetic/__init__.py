from .ledger import (COUNTER_KINDS, DiscardLedger, LedgerSnapshot, OpLedger,
                     current_ledger, ledger_diff, ledger_snapshot)
from .field import (ExtContext, ExtElement, FieldContext, FieldElement,
                    ext_exp, ext_inv, ext_mul, ext_sq, fp_exp, fp_inv, fp_mul)
from .curve import (CurveParams, CurvePoint, ProjectivePoint, distortion,
                    ec_add, ec_double, ec_scalar_mul, enumerate_points,
                    map_to_point, naf, random_point)
from .pairing import (GtElement, MillerTrace, ddh_decide, gt_random,
                      miller_loop, pair, pairing_ratio, tate_pairing)
from .assumptions import ASSUMPTION_KINDS, AssumptionInstance, assumption_instance
from .profiles import RECIPES, load_profile, read_param_file, write_param_file
