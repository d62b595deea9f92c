from .labelled_tree import LabelledTree, ValidationReport, leaf, weight, validate
from .enumeration import TreeEnumerator, enumerate_trees, alternating_census, tree_ceiling, DEFAULT_CEILING
from .index import vertex_factor, index, index_alt, summed_index
from .render import render_text, to_nested, from_nested
from .errors import TreeError, EnumerationCeilingExceeded
