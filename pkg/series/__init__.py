from .scaled_series import ScaledSeries, Series2x2, compose, invert_unit
from .hopkins import (f_series, f1_series, m_sequence, normalized_m_sequence, ratio_sequence, transfer_matrix,
                      matrix_partial_product, f_and_f1_from_m_sequence, f_and_f1_from_matrices, stable_limit,
                      w1_series, w1_matrix_series)
from .precision import PrecisionMonitor
from .serialization import series_to_records, series_from_records, coefficient_record
from .errors import (SeriesError, PrecisionBudgetExceeded, CompositionError, SeriesMismatchError,
                     StabilizationError)
