"""
The calibration core in isolation.

A model that is linear in its coefficients, f(x) = sum_m c_m phi_m(x), is
fitted by building the Gram matrix of the basis over the sample points and
the vector of moments against the data, then solving G c = b. When two
basis functions are proportional the Gram matrix is singular and the solver
returns the shortest coefficient vector among all minimisers.
"""

import numpy as np

from qmm import DesignSamples, FitOptions, gram_matrix, moment_vector, solve_coefficients

x = np.linspace(0.0, 1.0, 8)
y = 2.0 + 3.0 * x

# a straight line: basis {1, x}
samples = DesignSamples(np.vstack([np.ones_like(x), x]), y)
G, b = gram_matrix(samples), moment_vector(samples)
c, diag = solve_coefficients(G, b)
print("line coefficients:", c, "rank", diag.rank, "cond %.3g" % diag.condition_number)

# duplicate the constant: the system loses a rank, the answer splits the
# intercept evenly between the two copies
samples = DesignSamples(np.vstack([np.ones_like(x), np.ones_like(x), x]), y)
c, diag = solve_coefficients(gram_matrix(samples), moment_vector(samples))
print("duplicated constant:", c, "rank", diag.rank, "cond", diag.condition_number)

# per-sample weights pull the fit toward the heavily weighted points
y_bent = y + np.where(x > 0.7, 1.0, 0.0)
w = np.where(x > 0.7, 10.0, 1.0)
opts = FitOptions(weights=w)
samples = DesignSamples(np.vstack([np.ones_like(x), x]), y_bent)
c_w, _ = solve_coefficients(gram_matrix(samples, opts), moment_vector(samples, opts), opts)
c_u, _ = solve_coefficients(gram_matrix(samples), moment_vector(samples))
print("unweighted", c_u, "weighted", c_w)
