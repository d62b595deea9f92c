from .sequences import LambdaSeq, Parity, is_lambda, q_value, enumerate_lambda, lambda_table
from .compositions import (IntComposition, enumerate_weak_compositions, enumerate_compositions,
                           fixed_length_compositions)
