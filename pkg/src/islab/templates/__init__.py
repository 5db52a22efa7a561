"""k-templates: recognition, sampling, exact counting and the counting estimates."""

from .bounds import (
    Estimate1,
    SizeBound,
    check_f_estimate_1,
    check_f_estimate_2,
    check_number_of_templates,
    check_omitted_proposition,
    check_size_of_template_bound,
    f_estimate_1,
    number_of_templates_rhs,
    omitted_part_i,
    omitted_part_ii,
    omitted_proposition_sweep,
    size_of_template_bound,
)
from .compat import QCompatibility, beta_condition, check_alpha_witness, q_compatibility
from .counting import (
    count_templates_on_partition,
    crossing_pairs,
    f_bruteforce,
    f_bruteforce_all,
    f_exact,
    n_k,
    s_k,
    sun_count_by_splits,
    sun_level,
    turan_count,
    turan_graph,
    turan_sizes,
)
from .enumerate import count_templates, enumerate_templates, ordered_partitions, templates_on_partition
from .recognize import TemplateWitness, find_template_partition, is_clique, is_k_template_on
from .sampling import random_template, sample_ksun, sample_sun_forest

__all__ = [
    "Estimate1", "QCompatibility", "SizeBound", "TemplateWitness", "beta_condition",
    "check_alpha_witness", "check_f_estimate_1", "check_f_estimate_2",
    "check_number_of_templates", "check_omitted_proposition", "check_size_of_template_bound",
    "count_templates", "count_templates_on_partition", "crossing_pairs", "enumerate_templates",
    "f_bruteforce", "f_bruteforce_all", "f_estimate_1", "f_exact", "find_template_partition",
    "is_clique", "is_k_template_on", "n_k", "number_of_templates_rhs", "omitted_part_i",
    "omitted_part_ii", "omitted_proposition_sweep", "ordered_partitions", "q_compatibility",
    "random_template", "s_k", "sample_ksun", "sample_sun_forest", "size_of_template_bound",
    "sun_count_by_splits", "sun_level", "templates_on_partition", "turan_count", "turan_graph",
    "turan_sizes",
]
