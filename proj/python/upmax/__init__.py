# Copyright 2026 The upmax Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Branch and bound Max-SAT with inference-rule lower bounds."""

try:
    from . import _upmax as _ext
except ImportError:  # built in-tree: the extension sits on PYTHONPATH
    import _upmax as _ext

TOP = _ext.TOP
Formula = _ext.Formula
ParseError = _ext.ParseError
PreconditionError = _ext.PreconditionError
parse_dimacs = _ext.parse_dimacs
read_dimacs = _ext.read_dimacs
write_cnf = _ext.write_cnf
write_wcnf = _ext.write_wcnf
solve = _ext.solve
lower_bound = _ext.lower_bound
brute_force_optimum = _ext.brute_force_optimum
equivalent = _ext.equivalent
random_max_ksat = _ext.random_max_ksat
max_cut = _ext.max_cut
three_coloring = _ext.three_coloring

VARIANTS = ("0", "12", "1234", "z")


def formula(num_variables, clauses):
    """Builds a Formula from (literals, weight) pairs or bare literal lists."""
    f = Formula(num_variables)
    for clause in clauses:
        if isinstance(clause, tuple):
            f.add_clause(list(clause[0]), clause[1])
        else:
            f.add_clause(list(clause))
    return f


__all__ = [
    "TOP", "Formula", "ParseError", "PreconditionError", "VARIANTS",
    "brute_force_optimum", "equivalent", "formula", "lower_bound",
    "max_cut", "parse_dimacs", "random_max_ksat", "read_dimacs", "solve",
    "three_coloring", "write_cnf", "write_wcnf",
]
