from .base import MackeyCarrier, TambaraCarrier, add_via_transfer, mul_via_norm
from .burnside import BurnsideTambara, burnside_tambara
from .c2 import (PairTambara, TambaraPair, alpha, dual_numbers_pair, functor_from_pair,
                 integer_pair, pair_from_functor)
from .change import (CoinducedCarrier, Induction, coinduce_carrier, induce_bispan,
                     restrict_bispan, restrict_gset)
from .completion import (CompletionCarrier, SubsetData, chi, completion_norm, convolution_inverse,
                         convolution_unit, convolve)
from .fixed_point import FixedPointTambara, fixed_point_tambara
from .monoid_burnside import CoconstantMackey, MonoidBurnside, constant_mackey, monoid_burnside
from .qfunctor import burnside_q_class, proper_orbit_maps, q_functor
