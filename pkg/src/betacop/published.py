"""Published Monte Carlo results used as reference values for the table presets.

Each entry is ``(table, family, param, scheme, n, metric, value)``. ``param``
is Kendall's tau for tables 2, 6 and 7, Spearman's rho for table 3, the
copula parameter for tables 1, 4 and 5, and ``(tau, delta)`` for table 8.
Scheme labels follow the original tables: for the symmetry tables ``boot``
is the symmetrized straightforward bootstrap, ``beta`` the symmetrized
smoothed beta bootstrap applied to ``Sn``/``Rn``, ``beta2`` the same
resampling applied to the beta-copula statistics, and ``exchTest`` an
external multiplier test quoted only as a baseline.
"""

from __future__ import annotations

ENTRIES = (
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;1/3|1/3;1/3]', 0.8887),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.521),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.5222),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.3716),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;1/3|1/3;1/3]', 0.4595),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.2673),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.2798),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.1961),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;2/3|1/3;2/3]', 1.0112),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.1799),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.2988),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;2/3|1/3;2/3]', 0.5211),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.1069),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.1577),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.9899),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.2818),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.5092),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.1681),
    (1, 'clayton', 1.0, 'pdm', 100, 'mse_x1e4[2/3;2/3|2/3;2/3]', 0.625),
    (1, 'clayton', 1.0, 'pdm', 200, 'mse_x1e4[2/3;2/3|2/3;2/3]', 0.2992),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;1/3|1/3;1/3]', 0.9992),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.3402),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.3473),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.1956),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;1/3|1/3;1/3]', 0.6205),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.2427),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.2383),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.1547),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;2/3|1/3;2/3]', 0.7887),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.1294),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.1889),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;2/3|1/3;2/3]', 0.4933),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.0857),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.1366),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.7644),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.1821),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.4898),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.1376),
    (1, 'clayton', 1.0, 'beta_std', 100, 'mse_x1e4[2/3;2/3|2/3;2/3]', 0.7108),
    (1, 'clayton', 1.0, 'beta_std', 200, 'mse_x1e4[2/3;2/3|2/3;2/3]', 0.4183),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;1/3|1/3;1/3]', 1.2248),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.2929),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.2924),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.1456),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;1/3|1/3;1/3]', 0.6761),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;1/3|1/3;2/3]', 0.1874),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;1/3|2/3;1/3]', 0.1888),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;1/3|2/3;2/3]', 0.1128),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;2/3|1/3;2/3]', 0.8461),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.0992),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.1691),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;2/3|1/3;2/3]', 0.4814),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;2/3|2/3;1/3]', 0.0703),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[1/3;2/3|2/3;2/3]', 0.1071),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.8856),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.1682),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[2/3;1/3|2/3;1/3]', 0.4956),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[2/3;1/3|2/3;2/3]', 0.1149),
    (1, 'clayton', 1.0, 'beta', 100, 'mse_x1e4[2/3;2/3|2/3;2/3]', 1.1209),
    (1, 'clayton', 1.0, 'beta', 200, 'mse_x1e4[2/3;2/3|2/3;2/3]', 0.5913),
    (2, 'clayton', 0.0, 'asymp', 40, 'coverage', 0.952),
    (2, 'clayton', 0.0, 'asymp', 60, 'coverage', 0.93),
    (2, 'clayton', 0.0, 'asymp', 80, 'coverage', 0.941),
    (2, 'clayton', 0.0, 'asymp', 100, 'coverage', 0.959),
    (2, 'clayton', 0.5, 'asymp', 40, 'coverage', 0.946),
    (2, 'clayton', 0.5, 'asymp', 60, 'coverage', 0.931),
    (2, 'clayton', 0.5, 'asymp', 80, 'coverage', 0.937),
    (2, 'clayton', 0.5, 'asymp', 100, 'coverage', 0.943),
    (2, 'clayton', -0.5, 'asymp', 40, 'coverage', 0.933),
    (2, 'clayton', -0.5, 'asymp', 60, 'coverage', 0.941),
    (2, 'clayton', -0.5, 'asymp', 80, 'coverage', 0.939),
    (2, 'clayton', -0.5, 'asymp', 100, 'coverage', 0.926),
    (2, 'clayton', 0.0, 'boot', 40, 'coverage', 0.957),
    (2, 'clayton', 0.0, 'boot', 60, 'coverage', 0.937),
    (2, 'clayton', 0.0, 'boot', 80, 'coverage', 0.942),
    (2, 'clayton', 0.0, 'boot', 100, 'coverage', 0.963),
    (2, 'clayton', 0.5, 'boot', 40, 'coverage', 0.949),
    (2, 'clayton', 0.5, 'boot', 60, 'coverage', 0.94),
    (2, 'clayton', 0.5, 'boot', 80, 'coverage', 0.949),
    (2, 'clayton', 0.5, 'boot', 100, 'coverage', 0.949),
    (2, 'clayton', -0.5, 'boot', 40, 'coverage', 0.951),
    (2, 'clayton', -0.5, 'boot', 60, 'coverage', 0.947),
    (2, 'clayton', -0.5, 'boot', 80, 'coverage', 0.938),
    (2, 'clayton', -0.5, 'boot', 100, 'coverage', 0.935),
    (2, 'clayton', 0.0, 'beta', 40, 'coverage', 0.964),
    (2, 'clayton', 0.0, 'beta', 60, 'coverage', 0.949),
    (2, 'clayton', 0.0, 'beta', 80, 'coverage', 0.949),
    (2, 'clayton', 0.0, 'beta', 100, 'coverage', 0.966),
    (2, 'clayton', 0.5, 'beta', 40, 'coverage', 0.952),
    (2, 'clayton', 0.5, 'beta', 60, 'coverage', 0.947),
    (2, 'clayton', 0.5, 'beta', 80, 'coverage', 0.954),
    (2, 'clayton', 0.5, 'beta', 100, 'coverage', 0.955),
    (2, 'clayton', -0.5, 'beta', 40, 'coverage', 0.963),
    (2, 'clayton', -0.5, 'beta', 60, 'coverage', 0.935),
    (2, 'clayton', -0.5, 'beta', 80, 'coverage', 0.948),
    (2, 'clayton', -0.5, 'beta', 100, 'coverage', 0.939),
    (2, 'clayton', 0.0, 'asymp', 40, 'length', 0.449),
    (2, 'clayton', 0.0, 'asymp', 60, 'length', 0.355),
    (2, 'clayton', 0.0, 'asymp', 80, 'length', 0.304),
    (2, 'clayton', 0.0, 'asymp', 100, 'length', 0.271),
    (2, 'clayton', 0.5, 'asymp', 40, 'length', 0.364),
    (2, 'clayton', 0.5, 'asymp', 60, 'length', 0.287),
    (2, 'clayton', 0.5, 'asymp', 80, 'length', 0.245),
    (2, 'clayton', 0.5, 'asymp', 100, 'length', 0.217),
    (2, 'clayton', -0.5, 'asymp', 40, 'length', 0.378),
    (2, 'clayton', -0.5, 'asymp', 60, 'length', 0.302),
    (2, 'clayton', -0.5, 'asymp', 80, 'length', 0.257),
    (2, 'clayton', -0.5, 'asymp', 100, 'length', 0.227),
    (2, 'clayton', 0.0, 'boot', 40, 'length', 0.45),
    (2, 'clayton', 0.0, 'boot', 60, 'length', 0.357),
    (2, 'clayton', 0.0, 'boot', 80, 'length', 0.306),
    (2, 'clayton', 0.0, 'boot', 100, 'length', 0.272),
    (2, 'clayton', 0.5, 'boot', 40, 'length', 0.366),
    (2, 'clayton', 0.5, 'boot', 60, 'length', 0.288),
    (2, 'clayton', 0.5, 'boot', 80, 'length', 0.246),
    (2, 'clayton', 0.5, 'boot', 100, 'length', 0.218),
    (2, 'clayton', -0.5, 'boot', 40, 'length', 0.38),
    (2, 'clayton', -0.5, 'boot', 60, 'length', 0.304),
    (2, 'clayton', -0.5, 'boot', 80, 'length', 0.258),
    (2, 'clayton', -0.5, 'boot', 100, 'length', 0.228),
    (2, 'clayton', 0.0, 'beta', 40, 'length', 0.433),
    (2, 'clayton', 0.0, 'beta', 60, 'length', 0.347),
    (2, 'clayton', 0.0, 'beta', 80, 'length', 0.299),
    (2, 'clayton', 0.0, 'beta', 100, 'length', 0.268),
    (2, 'clayton', 0.5, 'beta', 40, 'length', 0.35),
    (2, 'clayton', 0.5, 'beta', 60, 'length', 0.279),
    (2, 'clayton', 0.5, 'beta', 80, 'length', 0.24),
    (2, 'clayton', 0.5, 'beta', 100, 'length', 0.213),
    (2, 'clayton', -0.5, 'beta', 40, 'length', 0.365),
    (2, 'clayton', -0.5, 'beta', 60, 'length', 0.294),
    (2, 'clayton', -0.5, 'beta', 80, 'length', 0.253),
    (2, 'clayton', -0.5, 'beta', 100, 'length', 0.224),
    (3, 'clayton', 0.0, 'boot', 40, 'coverage', 0.956),
    (3, 'clayton', 0.0, 'boot', 60, 'coverage', 0.943),
    (3, 'clayton', 0.0, 'boot', 80, 'coverage', 0.953),
    (3, 'clayton', 0.0, 'boot', 100, 'coverage', 0.951),
    (3, 'clayton', 0.5, 'boot', 40, 'coverage', 0.959),
    (3, 'clayton', 0.5, 'boot', 60, 'coverage', 0.953),
    (3, 'clayton', 0.5, 'boot', 80, 'coverage', 0.949),
    (3, 'clayton', 0.5, 'boot', 100, 'coverage', 0.952),
    (3, 'clayton', -0.5, 'boot', 40, 'coverage', 0.952),
    (3, 'clayton', -0.5, 'boot', 60, 'coverage', 0.954),
    (3, 'clayton', -0.5, 'boot', 80, 'coverage', 0.96),
    (3, 'clayton', -0.5, 'boot', 100, 'coverage', 0.956),
    (3, 'clayton', 0.0, 'beta', 40, 'coverage', 0.965),
    (3, 'clayton', 0.0, 'beta', 60, 'coverage', 0.946),
    (3, 'clayton', 0.0, 'beta', 80, 'coverage', 0.957),
    (3, 'clayton', 0.0, 'beta', 100, 'coverage', 0.956),
    (3, 'clayton', 0.5, 'beta', 40, 'coverage', 0.961),
    (3, 'clayton', 0.5, 'beta', 60, 'coverage', 0.958),
    (3, 'clayton', 0.5, 'beta', 80, 'coverage', 0.96),
    (3, 'clayton', 0.5, 'beta', 100, 'coverage', 0.952),
    (3, 'clayton', -0.5, 'beta', 40, 'coverage', 0.969),
    (3, 'clayton', -0.5, 'beta', 60, 'coverage', 0.957),
    (3, 'clayton', -0.5, 'beta', 80, 'coverage', 0.964),
    (3, 'clayton', -0.5, 'beta', 100, 'coverage', 0.958),
    (3, 'clayton', 0.0, 'boot', 40, 'length', 0.634),
    (3, 'clayton', 0.0, 'boot', 60, 'length', 0.514),
    (3, 'clayton', 0.0, 'boot', 80, 'length', 0.444),
    (3, 'clayton', 0.0, 'boot', 100, 'length', 0.397),
    (3, 'clayton', 0.5, 'boot', 40, 'length', 0.524),
    (3, 'clayton', 0.5, 'boot', 60, 'length', 0.424),
    (3, 'clayton', 0.5, 'boot', 80, 'length', 0.367),
    (3, 'clayton', 0.5, 'boot', 100, 'length', 0.326),
    (3, 'clayton', -0.5, 'boot', 40, 'length', 0.519),
    (3, 'clayton', -0.5, 'boot', 60, 'length', 0.418),
    (3, 'clayton', -0.5, 'boot', 80, 'length', 0.366),
    (3, 'clayton', -0.5, 'boot', 100, 'length', 0.324),
    (3, 'clayton', 0.0, 'beta', 40, 'length', 0.625),
    (3, 'clayton', 0.0, 'beta', 60, 'length', 0.51),
    (3, 'clayton', 0.0, 'beta', 80, 'length', 0.442),
    (3, 'clayton', 0.0, 'beta', 100, 'length', 0.395),
    (3, 'clayton', 0.5, 'beta', 40, 'length', 0.522),
    (3, 'clayton', 0.5, 'beta', 60, 'length', 0.424),
    (3, 'clayton', 0.5, 'beta', 80, 'length', 0.368),
    (3, 'clayton', 0.5, 'beta', 100, 'length', 0.325),
    (3, 'clayton', -0.5, 'beta', 40, 'length', 0.519),
    (3, 'clayton', -0.5, 'beta', 60, 'length', 0.418),
    (3, 'clayton', -0.5, 'beta', 80, 'length', 0.367),
    (3, 'clayton', -0.5, 'beta', 100, 'length', 0.324),
    (4, 'clayton', 1.0, 'asymp', 40, 'coverage', 0.954),
    (4, 'clayton', 1.0, 'asymp', 60, 'coverage', 0.969),
    (4, 'clayton', 1.0, 'asymp', 80, 'coverage', 0.96),
    (4, 'clayton', 1.0, 'asymp', 100, 'coverage', 0.965),
    (4, 'clayton', 2.0, 'asymp', 40, 'coverage', 0.951),
    (4, 'clayton', 2.0, 'asymp', 60, 'coverage', 0.94),
    (4, 'clayton', 2.0, 'asymp', 80, 'coverage', 0.94),
    (4, 'clayton', 2.0, 'asymp', 100, 'coverage', 0.946),
    (4, 'clayton', 1.0, 'boot', 40, 'coverage', 0.953),
    (4, 'clayton', 1.0, 'boot', 60, 'coverage', 0.943),
    (4, 'clayton', 1.0, 'boot', 80, 'coverage', 0.944),
    (4, 'clayton', 1.0, 'boot', 100, 'coverage', 0.943),
    (4, 'clayton', 2.0, 'boot', 40, 'coverage', 0.968),
    (4, 'clayton', 2.0, 'boot', 60, 'coverage', 0.952),
    (4, 'clayton', 2.0, 'boot', 80, 'coverage', 0.953),
    (4, 'clayton', 2.0, 'boot', 100, 'coverage', 0.951),
    (4, 'clayton', 1.0, 'beta', 40, 'coverage', 0.953),
    (4, 'clayton', 1.0, 'beta', 60, 'coverage', 0.964),
    (4, 'clayton', 1.0, 'beta', 80, 'coverage', 0.957),
    (4, 'clayton', 1.0, 'beta', 100, 'coverage', 0.952),
    (4, 'clayton', 2.0, 'beta', 40, 'coverage', 0.933),
    (4, 'clayton', 2.0, 'beta', 60, 'coverage', 0.904),
    (4, 'clayton', 2.0, 'beta', 80, 'coverage', 0.908),
    (4, 'clayton', 2.0, 'beta', 100, 'coverage', 0.906),
    (4, 'clayton', 1.0, 'param', 40, 'coverage', 0.924),
    (4, 'clayton', 1.0, 'param', 60, 'coverage', 0.923),
    (4, 'clayton', 1.0, 'param', 80, 'coverage', 0.933),
    (4, 'clayton', 1.0, 'param', 100, 'coverage', 0.948),
    (4, 'clayton', 2.0, 'param', 40, 'coverage', 0.957),
    (4, 'clayton', 2.0, 'param', 60, 'coverage', 0.951),
    (4, 'clayton', 2.0, 'param', 80, 'coverage', 0.955),
    (4, 'clayton', 2.0, 'param', 100, 'coverage', 0.953),
    (4, 'clayton', 1.0, 'asymp', 40, 'length', 2.011),
    (4, 'clayton', 1.0, 'asymp', 60, 'length', 1.632),
    (4, 'clayton', 1.0, 'asymp', 80, 'length', 1.354),
    (4, 'clayton', 1.0, 'asymp', 100, 'length', 1.237),
    (4, 'clayton', 2.0, 'asymp', 40, 'length', 2.764),
    (4, 'clayton', 2.0, 'asymp', 60, 'length', 2.142),
    (4, 'clayton', 2.0, 'asymp', 80, 'length', 1.821),
    (4, 'clayton', 2.0, 'asymp', 100, 'length', 1.615),
    (4, 'clayton', 1.0, 'boot', 40, 'length', 1.894),
    (4, 'clayton', 1.0, 'boot', 60, 'length', 1.449),
    (4, 'clayton', 1.0, 'boot', 80, 'length', 1.198),
    (4, 'clayton', 1.0, 'boot', 100, 'length', 1.046),
    (4, 'clayton', 2.0, 'boot', 40, 'length', 2.991),
    (4, 'clayton', 2.0, 'boot', 60, 'length', 2.205),
    (4, 'clayton', 2.0, 'boot', 80, 'length', 1.841),
    (4, 'clayton', 2.0, 'boot', 100, 'length', 1.626),
    (4, 'clayton', 1.0, 'beta', 40, 'length', 1.517),
    (4, 'clayton', 1.0, 'beta', 60, 'length', 1.225),
    (4, 'clayton', 1.0, 'beta', 80, 'length', 1.05),
    (4, 'clayton', 1.0, 'beta', 100, 'length', 0.935),
    (4, 'clayton', 2.0, 'beta', 40, 'length', 1.957),
    (4, 'clayton', 2.0, 'beta', 60, 'length', 1.612),
    (4, 'clayton', 2.0, 'beta', 80, 'length', 1.42),
    (4, 'clayton', 2.0, 'beta', 100, 'length', 1.296),
    (4, 'clayton', 1.0, 'param', 40, 'length', 1.914),
    (4, 'clayton', 1.0, 'param', 60, 'length', 1.448),
    (4, 'clayton', 1.0, 'param', 80, 'length', 1.222),
    (4, 'clayton', 1.0, 'param', 100, 'length', 1.07),
    (4, 'clayton', 2.0, 'param', 40, 'length', 2.821),
    (4, 'clayton', 2.0, 'param', 60, 'length', 2.15),
    (4, 'clayton', 2.0, 'param', 80, 'length', 1.829),
    (4, 'clayton', 2.0, 'param', 100, 'length', 1.617),
    (5, 'gauss', 0.7071067811865476, 'asymp', 40, 'coverage', 0.881),
    (5, 'gauss', 0.7071067811865476, 'asymp', 60, 'coverage', 0.895),
    (5, 'gauss', 0.7071067811865476, 'asymp', 80, 'coverage', 0.91),
    (5, 'gauss', 0.7071067811865476, 'asymp', 100, 'coverage', 0.928),
    (5, 'frank', 5.75, 'asymp', 40, 'coverage', 0.941),
    (5, 'frank', 5.75, 'asymp', 60, 'coverage', 0.95),
    (5, 'frank', 5.75, 'asymp', 80, 'coverage', 0.948),
    (5, 'frank', 5.75, 'asymp', 100, 'coverage', 0.965),
    (5, 'gumbel', 2.0, 'asymp', 40, 'coverage', 0.954),
    (5, 'gumbel', 2.0, 'asymp', 60, 'coverage', 0.94),
    (5, 'gumbel', 2.0, 'asymp', 80, 'coverage', 0.94),
    (5, 'gumbel', 2.0, 'asymp', 100, 'coverage', 0.955),
    (5, 'gauss', 0.7071067811865476, 'boot', 40, 'coverage', 0.942),
    (5, 'gauss', 0.7071067811865476, 'boot', 60, 'coverage', 0.944),
    (5, 'gauss', 0.7071067811865476, 'boot', 80, 'coverage', 0.947),
    (5, 'gauss', 0.7071067811865476, 'boot', 100, 'coverage', 0.95),
    (5, 'frank', 5.75, 'boot', 40, 'coverage', 0.957),
    (5, 'frank', 5.75, 'boot', 60, 'coverage', 0.956),
    (5, 'frank', 5.75, 'boot', 80, 'coverage', 0.946),
    (5, 'frank', 5.75, 'boot', 100, 'coverage', 0.963),
    (5, 'gumbel', 2.0, 'boot', 40, 'coverage', 0.965),
    (5, 'gumbel', 2.0, 'boot', 60, 'coverage', 0.951),
    (5, 'gumbel', 2.0, 'boot', 80, 'coverage', 0.953),
    (5, 'gumbel', 2.0, 'boot', 100, 'coverage', 0.965),
    (5, 'gauss', 0.7071067811865476, 'beta', 40, 'coverage', 0.968),
    (5, 'gauss', 0.7071067811865476, 'beta', 60, 'coverage', 0.962),
    (5, 'gauss', 0.7071067811865476, 'beta', 80, 'coverage', 0.97),
    (5, 'gauss', 0.7071067811865476, 'beta', 100, 'coverage', 0.953),
    (5, 'frank', 5.75, 'beta', 40, 'coverage', 0.965),
    (5, 'frank', 5.75, 'beta', 60, 'coverage', 0.961),
    (5, 'frank', 5.75, 'beta', 80, 'coverage', 0.952),
    (5, 'frank', 5.75, 'beta', 100, 'coverage', 0.965),
    (5, 'gumbel', 2.0, 'beta', 40, 'coverage', 0.97),
    (5, 'gumbel', 2.0, 'beta', 60, 'coverage', 0.951),
    (5, 'gumbel', 2.0, 'beta', 80, 'coverage', 0.952),
    (5, 'gumbel', 2.0, 'beta', 100, 'coverage', 0.954),
    (5, 'gauss', 0.7071067811865476, 'param', 40, 'coverage', 0.903),
    (5, 'gauss', 0.7071067811865476, 'param', 60, 'coverage', 0.921),
    (5, 'gauss', 0.7071067811865476, 'param', 80, 'coverage', 0.923),
    (5, 'gauss', 0.7071067811865476, 'param', 100, 'coverage', 0.93),
    (5, 'frank', 5.75, 'param', 40, 'coverage', 0.938),
    (5, 'frank', 5.75, 'param', 60, 'coverage', 0.956),
    (5, 'frank', 5.75, 'param', 80, 'coverage', 0.941),
    (5, 'frank', 5.75, 'param', 100, 'coverage', 0.962),
    (5, 'gumbel', 2.0, 'param', 40, 'coverage', 0.924),
    (5, 'gumbel', 2.0, 'param', 60, 'coverage', 0.926),
    (5, 'gumbel', 2.0, 'param', 80, 'coverage', 0.932),
    (5, 'gumbel', 2.0, 'param', 100, 'coverage', 0.945),
    (5, 'gauss', 0.7071067811865476, 'asymp', 40, 'length', 0.303),
    (5, 'gauss', 0.7071067811865476, 'asymp', 60, 'length', 0.274),
    (5, 'gauss', 0.7071067811865476, 'asymp', 80, 'length', 0.213),
    (5, 'gauss', 0.7071067811865476, 'asymp', 100, 'length', 0.193),
    (5, 'frank', 5.75, 'asymp', 40, 'length', 5.699),
    (5, 'frank', 5.75, 'asymp', 60, 'length', 4.487),
    (5, 'frank', 5.75, 'asymp', 80, 'length', 3.821),
    (5, 'frank', 5.75, 'asymp', 100, 'length', 3.391),
    (5, 'gumbel', 2.0, 'asymp', 40, 'length', 1.425),
    (5, 'gumbel', 2.0, 'asymp', 60, 'length', 1.082),
    (5, 'gumbel', 2.0, 'asymp', 80, 'length', 0.929),
    (5, 'gumbel', 2.0, 'asymp', 100, 'length', 0.816),
    (5, 'gauss', 0.7071067811865476, 'boot', 40, 'length', 0.319),
    (5, 'gauss', 0.7071067811865476, 'boot', 60, 'length', 0.257),
    (5, 'gauss', 0.7071067811865476, 'boot', 80, 'length', 0.219),
    (5, 'gauss', 0.7071067811865476, 'boot', 100, 'length', 0.197),
    (5, 'frank', 5.75, 'boot', 40, 'length', 6.139),
    (5, 'frank', 5.75, 'boot', 60, 'length', 4.677),
    (5, 'frank', 5.75, 'boot', 80, 'length', 3.949),
    (5, 'frank', 5.75, 'boot', 100, 'length', 3.464),
    (5, 'gumbel', 2.0, 'boot', 40, 'length', 1.572),
    (5, 'gumbel', 2.0, 'boot', 60, 'length', 1.162),
    (5, 'gumbel', 2.0, 'boot', 80, 'length', 0.968),
    (5, 'gumbel', 2.0, 'boot', 100, 'length', 0.855),
    (5, 'gauss', 0.7071067811865476, 'beta', 40, 'length', 0.341),
    (5, 'gauss', 0.7071067811865476, 'beta', 60, 'length', 0.269),
    (5, 'gauss', 0.7071067811865476, 'beta', 80, 'length', 0.228),
    (5, 'gauss', 0.7071067811865476, 'beta', 100, 'length', 0.203),
    (5, 'frank', 5.75, 'beta', 40, 'length', 5.367),
    (5, 'frank', 5.75, 'beta', 60, 'length', 4.335),
    (5, 'frank', 5.75, 'beta', 80, 'length', 3.735),
    (5, 'frank', 5.75, 'beta', 100, 'length', 3.329),
    (5, 'gumbel', 2.0, 'beta', 40, 'length', 1.17),
    (5, 'gumbel', 2.0, 'beta', 60, 'length', 0.947),
    (5, 'gumbel', 2.0, 'beta', 80, 'length', 0.826),
    (5, 'gumbel', 2.0, 'beta', 100, 'length', 0.747),
    (5, 'gauss', 0.7071067811865476, 'param', 40, 'length', 0.292),
    (5, 'gauss', 0.7071067811865476, 'param', 60, 'length', 0.242),
    (5, 'gauss', 0.7071067811865476, 'param', 80, 'length', 0.21),
    (5, 'gauss', 0.7071067811865476, 'param', 100, 'length', 0.191),
    (5, 'frank', 5.75, 'param', 40, 'length', 5.729),
    (5, 'frank', 5.75, 'param', 60, 'length', 4.494),
    (5, 'frank', 5.75, 'param', 80, 'length', 3.848),
    (5, 'frank', 5.75, 'param', 100, 'length', 3.389),
    (5, 'gumbel', 2.0, 'param', 40, 'length', 1.546),
    (5, 'gumbel', 2.0, 'param', 60, 'length', 1.17),
    (5, 'gumbel', 2.0, 'param', 80, 'length', 0.983),
    (5, 'gumbel', 2.0, 'param', 100, 'length', 0.869),
    (6, 'clayton', -0.2, 'exchTest', 50, 'rejection_Sn', 0.055),
    (6, 'clayton', -0.2, 'exchTest', 50, 'rejection_Rn', 0.044),
    (6, 'clayton', -0.2, 'exchTest', 100, 'rejection_Sn', 0.033),
    (6, 'clayton', -0.2, 'exchTest', 100, 'rejection_Rn', 0.035),
    (6, 'clayton', -0.2, 'exchTest', 200, 'rejection_Sn', 0.039),
    (6, 'clayton', -0.2, 'exchTest', 200, 'rejection_Rn', 0.039),
    (6, 'clayton', -0.2, 'exchTest', 400, 'rejection_Sn', 0.04),
    (6, 'clayton', -0.2, 'exchTest', 400, 'rejection_Rn', 0.051),
    (6, 'clayton', -0.2, 'boot', 50, 'rejection_Sn', 0.021),
    (6, 'clayton', -0.2, 'boot', 50, 'rejection_Rn', 0.009),
    (6, 'clayton', -0.2, 'boot', 100, 'rejection_Sn', 0.024),
    (6, 'clayton', -0.2, 'boot', 100, 'rejection_Rn', 0.019),
    (6, 'clayton', -0.2, 'boot', 200, 'rejection_Sn', 0.031),
    (6, 'clayton', -0.2, 'boot', 200, 'rejection_Rn', 0.027),
    (6, 'clayton', -0.2, 'boot', 400, 'rejection_Sn', 0.034),
    (6, 'clayton', -0.2, 'boot', 400, 'rejection_Rn', 0.044),
    (6, 'clayton', -0.2, 'beta', 50, 'rejection_Sn', 0.057),
    (6, 'clayton', -0.2, 'beta', 50, 'rejection_Rn', 0.046),
    (6, 'clayton', -0.2, 'beta', 100, 'rejection_Sn', 0.038),
    (6, 'clayton', -0.2, 'beta', 100, 'rejection_Rn', 0.035),
    (6, 'clayton', -0.2, 'beta', 200, 'rejection_Sn', 0.039),
    (6, 'clayton', -0.2, 'beta', 200, 'rejection_Rn', 0.042),
    (6, 'clayton', -0.2, 'beta', 400, 'rejection_Sn', 0.041),
    (6, 'clayton', -0.2, 'beta', 400, 'rejection_Rn', 0.059),
    (6, 'clayton', -0.2, 'beta2', 50, 'rejection_Sn', 0.042),
    (6, 'clayton', -0.2, 'beta2', 50, 'rejection_Rn', 0.05),
    (6, 'clayton', -0.2, 'beta2', 100, 'rejection_Sn', 0.036),
    (6, 'clayton', -0.2, 'beta2', 100, 'rejection_Rn', 0.037),
    (6, 'clayton', -0.2, 'beta2', 200, 'rejection_Sn', 0.043),
    (6, 'clayton', -0.2, 'beta2', 200, 'rejection_Rn', 0.041),
    (6, 'clayton', -0.2, 'beta2', 400, 'rejection_Sn', 0.057),
    (6, 'clayton', -0.2, 'beta2', 400, 'rejection_Rn', 0.059),
    (6, 'clayton', 0.25, 'exchTest', 50, 'rejection_Sn', 0.039),
    (6, 'clayton', 0.25, 'exchTest', 50, 'rejection_Rn', 0.03),
    (6, 'clayton', 0.25, 'exchTest', 100, 'rejection_Sn', 0.029),
    (6, 'clayton', 0.25, 'exchTest', 100, 'rejection_Rn', 0.022),
    (6, 'clayton', 0.25, 'exchTest', 200, 'rejection_Sn', 0.036),
    (6, 'clayton', 0.25, 'exchTest', 200, 'rejection_Rn', 0.04),
    (6, 'clayton', 0.25, 'exchTest', 400, 'rejection_Sn', 0.036),
    (6, 'clayton', 0.25, 'exchTest', 400, 'rejection_Rn', 0.031),
    (6, 'clayton', 0.25, 'boot', 50, 'rejection_Sn', 0.009),
    (6, 'clayton', 0.25, 'boot', 50, 'rejection_Rn', 0.001),
    (6, 'clayton', 0.25, 'boot', 100, 'rejection_Sn', 0.015),
    (6, 'clayton', 0.25, 'boot', 100, 'rejection_Rn', 0.011),
    (6, 'clayton', 0.25, 'boot', 200, 'rejection_Sn', 0.026),
    (6, 'clayton', 0.25, 'boot', 200, 'rejection_Rn', 0.02),
    (6, 'clayton', 0.25, 'boot', 400, 'rejection_Sn', 0.034),
    (6, 'clayton', 0.25, 'boot', 400, 'rejection_Rn', 0.03),
    (6, 'clayton', 0.25, 'beta', 50, 'rejection_Sn', 0.039),
    (6, 'clayton', 0.25, 'beta', 50, 'rejection_Rn', 0.042),
    (6, 'clayton', 0.25, 'beta', 100, 'rejection_Sn', 0.039),
    (6, 'clayton', 0.25, 'beta', 100, 'rejection_Rn', 0.032),
    (6, 'clayton', 0.25, 'beta', 200, 'rejection_Sn', 0.044),
    (6, 'clayton', 0.25, 'beta', 200, 'rejection_Rn', 0.041),
    (6, 'clayton', 0.25, 'beta', 400, 'rejection_Sn', 0.046),
    (6, 'clayton', 0.25, 'beta', 400, 'rejection_Rn', 0.043),
    (6, 'clayton', 0.25, 'beta2', 50, 'rejection_Sn', 0.043),
    (6, 'clayton', 0.25, 'beta2', 50, 'rejection_Rn', 0.033),
    (6, 'clayton', 0.25, 'beta2', 100, 'rejection_Sn', 0.034),
    (6, 'clayton', 0.25, 'beta2', 100, 'rejection_Rn', 0.033),
    (6, 'clayton', 0.25, 'beta2', 200, 'rejection_Sn', 0.041),
    (6, 'clayton', 0.25, 'beta2', 200, 'rejection_Rn', 0.044),
    (6, 'clayton', 0.25, 'beta2', 400, 'rejection_Sn', 0.044),
    (6, 'clayton', 0.25, 'beta2', 400, 'rejection_Rn', 0.045),
    (6, 'clayton', 0.5, 'exchTest', 50, 'rejection_Sn', 0.033),
    (6, 'clayton', 0.5, 'exchTest', 50, 'rejection_Rn', 0.015),
    (6, 'clayton', 0.5, 'exchTest', 100, 'rejection_Sn', 0.02),
    (6, 'clayton', 0.5, 'exchTest', 100, 'rejection_Rn', 0.014),
    (6, 'clayton', 0.5, 'exchTest', 200, 'rejection_Sn', 0.026),
    (6, 'clayton', 0.5, 'exchTest', 200, 'rejection_Rn', 0.03),
    (6, 'clayton', 0.5, 'exchTest', 400, 'rejection_Sn', 0.019),
    (6, 'clayton', 0.5, 'exchTest', 400, 'rejection_Rn', 0.031),
    (6, 'clayton', 0.5, 'boot', 50, 'rejection_Sn', 0.001),
    (6, 'clayton', 0.5, 'boot', 50, 'rejection_Rn', 0.001),
    (6, 'clayton', 0.5, 'boot', 100, 'rejection_Sn', 0.008),
    (6, 'clayton', 0.5, 'boot', 100, 'rejection_Rn', 0.005),
    (6, 'clayton', 0.5, 'boot', 200, 'rejection_Sn', 0.015),
    (6, 'clayton', 0.5, 'boot', 200, 'rejection_Rn', 0.017),
    (6, 'clayton', 0.5, 'boot', 400, 'rejection_Sn', 0.017),
    (6, 'clayton', 0.5, 'boot', 400, 'rejection_Rn', 0.025),
    (6, 'clayton', 0.5, 'beta', 50, 'rejection_Sn', 0.03),
    (6, 'clayton', 0.5, 'beta', 50, 'rejection_Rn', 0.02),
    (6, 'clayton', 0.5, 'beta', 100, 'rejection_Sn', 0.029),
    (6, 'clayton', 0.5, 'beta', 100, 'rejection_Rn', 0.022),
    (6, 'clayton', 0.5, 'beta', 200, 'rejection_Sn', 0.039),
    (6, 'clayton', 0.5, 'beta', 200, 'rejection_Rn', 0.04),
    (6, 'clayton', 0.5, 'beta', 400, 'rejection_Sn', 0.028),
    (6, 'clayton', 0.5, 'beta', 400, 'rejection_Rn', 0.047),
    (6, 'clayton', 0.5, 'beta2', 50, 'rejection_Sn', 0.029),
    (6, 'clayton', 0.5, 'beta2', 50, 'rejection_Rn', 0.019),
    (6, 'clayton', 0.5, 'beta2', 100, 'rejection_Sn', 0.024),
    (6, 'clayton', 0.5, 'beta2', 100, 'rejection_Rn', 0.023),
    (6, 'clayton', 0.5, 'beta2', 200, 'rejection_Sn', 0.046),
    (6, 'clayton', 0.5, 'beta2', 200, 'rejection_Rn', 0.045),
    (6, 'clayton', 0.5, 'beta2', 400, 'rejection_Sn', 0.041),
    (6, 'clayton', 0.5, 'beta2', 400, 'rejection_Rn', 0.046),
    (6, 'clayton', 0.75, 'exchTest', 50, 'rejection_Sn', 0.025),
    (6, 'clayton', 0.75, 'exchTest', 50, 'rejection_Rn', 0.0),
    (6, 'clayton', 0.75, 'exchTest', 100, 'rejection_Sn', 0.026),
    (6, 'clayton', 0.75, 'exchTest', 100, 'rejection_Rn', 0.007),
    (6, 'clayton', 0.75, 'exchTest', 200, 'rejection_Sn', 0.018),
    (6, 'clayton', 0.75, 'exchTest', 200, 'rejection_Rn', 0.007),
    (6, 'clayton', 0.75, 'exchTest', 400, 'rejection_Sn', 0.014),
    (6, 'clayton', 0.75, 'exchTest', 400, 'rejection_Rn', 0.012),
    (6, 'clayton', 0.75, 'boot', 50, 'rejection_Sn', 0.0),
    (6, 'clayton', 0.75, 'boot', 50, 'rejection_Rn', 0.0),
    (6, 'clayton', 0.75, 'boot', 100, 'rejection_Sn', 0.002),
    (6, 'clayton', 0.75, 'boot', 100, 'rejection_Rn', 0.0),
    (6, 'clayton', 0.75, 'boot', 200, 'rejection_Sn', 0.001),
    (6, 'clayton', 0.75, 'boot', 200, 'rejection_Rn', 0.001),
    (6, 'clayton', 0.75, 'boot', 400, 'rejection_Sn', 0.008),
    (6, 'clayton', 0.75, 'boot', 400, 'rejection_Rn', 0.004),
    (6, 'clayton', 0.75, 'beta', 50, 'rejection_Sn', 0.006),
    (6, 'clayton', 0.75, 'beta', 50, 'rejection_Rn', 0.0),
    (6, 'clayton', 0.75, 'beta', 100, 'rejection_Sn', 0.017),
    (6, 'clayton', 0.75, 'beta', 100, 'rejection_Rn', 0.006),
    (6, 'clayton', 0.75, 'beta', 200, 'rejection_Sn', 0.026),
    (6, 'clayton', 0.75, 'beta', 200, 'rejection_Rn', 0.017),
    (6, 'clayton', 0.75, 'beta', 400, 'rejection_Sn', 0.029),
    (6, 'clayton', 0.75, 'beta', 400, 'rejection_Rn', 0.029),
    (6, 'clayton', 0.75, 'beta2', 50, 'rejection_Sn', 0.001),
    (6, 'clayton', 0.75, 'beta2', 50, 'rejection_Rn', 0.0),
    (6, 'clayton', 0.75, 'beta2', 100, 'rejection_Sn', 0.014),
    (6, 'clayton', 0.75, 'beta2', 100, 'rejection_Rn', 0.007),
    (6, 'clayton', 0.75, 'beta2', 200, 'rejection_Sn', 0.029),
    (6, 'clayton', 0.75, 'beta2', 200, 'rejection_Rn', 0.021),
    (6, 'clayton', 0.75, 'beta2', 400, 'rejection_Sn', 0.034),
    (6, 'clayton', 0.75, 'beta2', 400, 'rejection_Rn', 0.036),
    (7, 'gauss', -0.5, 'exchTest', 50, 'rejection_Sn', 0.047),
    (7, 'gauss', -0.5, 'exchTest', 50, 'rejection_Rn', 0.026),
    (7, 'gauss', -0.5, 'exchTest', 100, 'rejection_Sn', 0.032),
    (7, 'gauss', -0.5, 'exchTest', 100, 'rejection_Rn', 0.037),
    (7, 'gauss', -0.5, 'exchTest', 200, 'rejection_Sn', 0.038),
    (7, 'gauss', -0.5, 'exchTest', 200, 'rejection_Rn', 0.037),
    (7, 'gauss', -0.5, 'exchTest', 400, 'rejection_Sn', 0.039),
    (7, 'gauss', -0.5, 'exchTest', 400, 'rejection_Rn', 0.041),
    (7, 'gauss', -0.5, 'boot', 50, 'rejection_Sn', 0.022),
    (7, 'gauss', -0.5, 'boot', 50, 'rejection_Rn', 0.007),
    (7, 'gauss', -0.5, 'boot', 100, 'rejection_Sn', 0.023),
    (7, 'gauss', -0.5, 'boot', 100, 'rejection_Rn', 0.014),
    (7, 'gauss', -0.5, 'boot', 200, 'rejection_Sn', 0.032),
    (7, 'gauss', -0.5, 'boot', 200, 'rejection_Rn', 0.027),
    (7, 'gauss', -0.5, 'boot', 400, 'rejection_Sn', 0.04),
    (7, 'gauss', -0.5, 'boot', 400, 'rejection_Rn', 0.033),
    (7, 'gauss', -0.5, 'beta', 50, 'rejection_Sn', 0.044),
    (7, 'gauss', -0.5, 'beta', 50, 'rejection_Rn', 0.02),
    (7, 'gauss', -0.5, 'beta', 100, 'rejection_Sn', 0.03),
    (7, 'gauss', -0.5, 'beta', 100, 'rejection_Rn', 0.03),
    (7, 'gauss', -0.5, 'beta', 200, 'rejection_Sn', 0.035),
    (7, 'gauss', -0.5, 'beta', 200, 'rejection_Rn', 0.036),
    (7, 'gauss', -0.5, 'beta', 400, 'rejection_Sn', 0.043),
    (7, 'gauss', -0.5, 'beta', 400, 'rejection_Rn', 0.04),
    (7, 'gauss', -0.5, 'beta2', 50, 'rejection_Sn', 0.028),
    (7, 'gauss', -0.5, 'beta2', 50, 'rejection_Rn', 0.022),
    (7, 'gauss', -0.5, 'beta2', 100, 'rejection_Sn', 0.035),
    (7, 'gauss', -0.5, 'beta2', 100, 'rejection_Rn', 0.034),
    (7, 'gauss', -0.5, 'beta2', 200, 'rejection_Sn', 0.045),
    (7, 'gauss', -0.5, 'beta2', 200, 'rejection_Rn', 0.041),
    (7, 'gauss', -0.5, 'beta2', 400, 'rejection_Sn', 0.043),
    (7, 'gauss', -0.5, 'beta2', 400, 'rejection_Rn', 0.042),
    (7, 'gauss', 0.25, 'exchTest', 50, 'rejection_Sn', 0.028),
    (7, 'gauss', 0.25, 'exchTest', 50, 'rejection_Rn', 0.029),
    (7, 'gauss', 0.25, 'exchTest', 100, 'rejection_Sn', 0.035),
    (7, 'gauss', 0.25, 'exchTest', 100, 'rejection_Rn', 0.025),
    (7, 'gauss', 0.25, 'exchTest', 200, 'rejection_Sn', 0.031),
    (7, 'gauss', 0.25, 'exchTest', 200, 'rejection_Rn', 0.03),
    (7, 'gauss', 0.25, 'exchTest', 400, 'rejection_Sn', 0.04),
    (7, 'gauss', 0.25, 'exchTest', 400, 'rejection_Rn', 0.041),
    (7, 'gauss', 0.25, 'boot', 50, 'rejection_Sn', 0.007),
    (7, 'gauss', 0.25, 'boot', 50, 'rejection_Rn', 0.008),
    (7, 'gauss', 0.25, 'boot', 100, 'rejection_Sn', 0.015),
    (7, 'gauss', 0.25, 'boot', 100, 'rejection_Rn', 0.015),
    (7, 'gauss', 0.25, 'boot', 200, 'rejection_Sn', 0.023),
    (7, 'gauss', 0.25, 'boot', 200, 'rejection_Rn', 0.025),
    (7, 'gauss', 0.25, 'boot', 400, 'rejection_Sn', 0.038),
    (7, 'gauss', 0.25, 'boot', 400, 'rejection_Rn', 0.037),
    (7, 'gauss', 0.25, 'beta', 50, 'rejection_Sn', 0.033),
    (7, 'gauss', 0.25, 'beta', 50, 'rejection_Rn', 0.04),
    (7, 'gauss', 0.25, 'beta', 100, 'rejection_Sn', 0.038),
    (7, 'gauss', 0.25, 'beta', 100, 'rejection_Rn', 0.03),
    (7, 'gauss', 0.25, 'beta', 200, 'rejection_Sn', 0.039),
    (7, 'gauss', 0.25, 'beta', 200, 'rejection_Rn', 0.033),
    (7, 'gauss', 0.25, 'beta', 400, 'rejection_Sn', 0.045),
    (7, 'gauss', 0.25, 'beta', 400, 'rejection_Rn', 0.048),
    (7, 'gauss', 0.25, 'beta2', 50, 'rejection_Sn', 0.048),
    (7, 'gauss', 0.25, 'beta2', 50, 'rejection_Rn', 0.037),
    (7, 'gauss', 0.25, 'beta2', 100, 'rejection_Sn', 0.033),
    (7, 'gauss', 0.25, 'beta2', 100, 'rejection_Rn', 0.031),
    (7, 'gauss', 0.25, 'beta2', 200, 'rejection_Sn', 0.037),
    (7, 'gauss', 0.25, 'beta2', 200, 'rejection_Rn', 0.037),
    (7, 'gauss', 0.25, 'beta2', 400, 'rejection_Sn', 0.047),
    (7, 'gauss', 0.25, 'beta2', 400, 'rejection_Rn', 0.048),
    (7, 'gauss', 0.5, 'exchTest', 50, 'rejection_Sn', 0.034),
    (7, 'gauss', 0.5, 'exchTest', 50, 'rejection_Rn', 0.011),
    (7, 'gauss', 0.5, 'exchTest', 100, 'rejection_Sn', 0.018),
    (7, 'gauss', 0.5, 'exchTest', 100, 'rejection_Rn', 0.014),
    (7, 'gauss', 0.5, 'exchTest', 200, 'rejection_Sn', 0.025),
    (7, 'gauss', 0.5, 'exchTest', 200, 'rejection_Rn', 0.019),
    (7, 'gauss', 0.5, 'exchTest', 400, 'rejection_Sn', 0.029),
    (7, 'gauss', 0.5, 'exchTest', 400, 'rejection_Rn', 0.034),
    (7, 'gauss', 0.5, 'boot', 50, 'rejection_Sn', 0.003),
    (7, 'gauss', 0.5, 'boot', 50, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.5, 'boot', 100, 'rejection_Sn', 0.005),
    (7, 'gauss', 0.5, 'boot', 100, 'rejection_Rn', 0.005),
    (7, 'gauss', 0.5, 'boot', 200, 'rejection_Sn', 0.015),
    (7, 'gauss', 0.5, 'boot', 200, 'rejection_Rn', 0.006),
    (7, 'gauss', 0.5, 'boot', 400, 'rejection_Sn', 0.026),
    (7, 'gauss', 0.5, 'boot', 400, 'rejection_Rn', 0.028),
    (7, 'gauss', 0.5, 'beta', 50, 'rejection_Sn', 0.032),
    (7, 'gauss', 0.5, 'beta', 50, 'rejection_Rn', 0.016),
    (7, 'gauss', 0.5, 'beta', 100, 'rejection_Sn', 0.033),
    (7, 'gauss', 0.5, 'beta', 100, 'rejection_Rn', 0.024),
    (7, 'gauss', 0.5, 'beta', 200, 'rejection_Sn', 0.041),
    (7, 'gauss', 0.5, 'beta', 200, 'rejection_Rn', 0.031),
    (7, 'gauss', 0.5, 'beta', 400, 'rejection_Sn', 0.044),
    (7, 'gauss', 0.5, 'beta', 400, 'rejection_Rn', 0.042),
    (7, 'gauss', 0.5, 'beta2', 50, 'rejection_Sn', 0.029),
    (7, 'gauss', 0.5, 'beta2', 50, 'rejection_Rn', 0.018),
    (7, 'gauss', 0.5, 'beta2', 100, 'rejection_Sn', 0.026),
    (7, 'gauss', 0.5, 'beta2', 100, 'rejection_Rn', 0.023),
    (7, 'gauss', 0.5, 'beta2', 200, 'rejection_Sn', 0.034),
    (7, 'gauss', 0.5, 'beta2', 200, 'rejection_Rn', 0.033),
    (7, 'gauss', 0.5, 'beta2', 400, 'rejection_Sn', 0.048),
    (7, 'gauss', 0.5, 'beta2', 400, 'rejection_Rn', 0.047),
    (7, 'gauss', 0.75, 'exchTest', 50, 'rejection_Sn', 0.018),
    (7, 'gauss', 0.75, 'exchTest', 50, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'exchTest', 100, 'rejection_Sn', 0.017),
    (7, 'gauss', 0.75, 'exchTest', 100, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'exchTest', 200, 'rejection_Sn', 0.011),
    (7, 'gauss', 0.75, 'exchTest', 200, 'rejection_Rn', 0.005),
    (7, 'gauss', 0.75, 'exchTest', 400, 'rejection_Sn', 0.008),
    (7, 'gauss', 0.75, 'exchTest', 400, 'rejection_Rn', 0.009),
    (7, 'gauss', 0.75, 'boot', 50, 'rejection_Sn', 0.0),
    (7, 'gauss', 0.75, 'boot', 50, 'rejection_Rn', 0.0),
    (7, 'gauss', 0.75, 'boot', 100, 'rejection_Sn', 0.0),
    (7, 'gauss', 0.75, 'boot', 100, 'rejection_Rn', 0.0),
    (7, 'gauss', 0.75, 'boot', 200, 'rejection_Sn', 0.002),
    (7, 'gauss', 0.75, 'boot', 200, 'rejection_Rn', 0.0),
    (7, 'gauss', 0.75, 'boot', 400, 'rejection_Sn', 0.006),
    (7, 'gauss', 0.75, 'boot', 400, 'rejection_Rn', 0.003),
    (7, 'gauss', 0.75, 'beta', 50, 'rejection_Sn', 0.006),
    (7, 'gauss', 0.75, 'beta', 50, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'beta', 100, 'rejection_Sn', 0.015),
    (7, 'gauss', 0.75, 'beta', 100, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'beta', 200, 'rejection_Sn', 0.021),
    (7, 'gauss', 0.75, 'beta', 200, 'rejection_Rn', 0.01),
    (7, 'gauss', 0.75, 'beta', 400, 'rejection_Sn', 0.029),
    (7, 'gauss', 0.75, 'beta', 400, 'rejection_Rn', 0.028),
    (7, 'gauss', 0.75, 'beta2', 50, 'rejection_Sn', 0.002),
    (7, 'gauss', 0.75, 'beta2', 50, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'beta2', 100, 'rejection_Sn', 0.005),
    (7, 'gauss', 0.75, 'beta2', 100, 'rejection_Rn', 0.001),
    (7, 'gauss', 0.75, 'beta2', 200, 'rejection_Sn', 0.016),
    (7, 'gauss', 0.75, 'beta2', 200, 'rejection_Rn', 0.011),
    (7, 'gauss', 0.75, 'beta2', 400, 'rejection_Sn', 0.035),
    (7, 'gauss', 0.75, 'beta2', 400, 'rejection_Rn', 0.027),
    (8, 'clayton', (0.25, 0.25), 'exchTest', 50, 'rejection_Rn', 0.025),
    (8, 'gauss', (0.25, 0.25), 'exchTest', 50, 'rejection_Rn', 0.033),
    (8, 'clayton', (0.25, 0.25), 'exchTest', 100, 'rejection_Rn', 0.031),
    (8, 'gauss', (0.25, 0.25), 'exchTest', 100, 'rejection_Rn', 0.028),
    (8, 'clayton', (0.25, 0.25), 'exchTest', 200, 'rejection_Rn', 0.042),
    (8, 'gauss', (0.25, 0.25), 'exchTest', 200, 'rejection_Rn', 0.034),
    (8, 'clayton', (0.25, 0.25), 'exchTest', 400, 'rejection_Rn', 0.049),
    (8, 'gauss', (0.25, 0.25), 'exchTest', 400, 'rejection_Rn', 0.05),
    (8, 'clayton', (0.25, 0.25), 'boot', 50, 'rejection_Rn', 0.006),
    (8, 'gauss', (0.25, 0.25), 'boot', 50, 'rejection_Rn', 0.006),
    (8, 'clayton', (0.25, 0.25), 'boot', 100, 'rejection_Rn', 0.017),
    (8, 'gauss', (0.25, 0.25), 'boot', 100, 'rejection_Rn', 0.01),
    (8, 'clayton', (0.25, 0.25), 'boot', 200, 'rejection_Rn', 0.029),
    (8, 'gauss', (0.25, 0.25), 'boot', 200, 'rejection_Rn', 0.032),
    (8, 'clayton', (0.25, 0.25), 'boot', 400, 'rejection_Rn', 0.042),
    (8, 'gauss', (0.25, 0.25), 'boot', 400, 'rejection_Rn', 0.047),
    (8, 'clayton', (0.25, 0.25), 'beta', 50, 'rejection_Rn', 0.034),
    (8, 'gauss', (0.25, 0.25), 'beta', 50, 'rejection_Rn', 0.044),
    (8, 'clayton', (0.25, 0.25), 'beta', 100, 'rejection_Rn', 0.039),
    (8, 'gauss', (0.25, 0.25), 'beta', 100, 'rejection_Rn', 0.042),
    (8, 'clayton', (0.25, 0.25), 'beta', 200, 'rejection_Rn', 0.056),
    (8, 'gauss', (0.25, 0.25), 'beta', 200, 'rejection_Rn', 0.048),
    (8, 'clayton', (0.25, 0.25), 'beta', 400, 'rejection_Rn', 0.05),
    (8, 'gauss', (0.25, 0.25), 'beta', 400, 'rejection_Rn', 0.057),
    (8, 'clayton', (0.25, 0.25), 'beta2', 50, 'rejection_Rn', 0.034),
    (8, 'gauss', (0.25, 0.25), 'beta2', 50, 'rejection_Rn', 0.046),
    (8, 'clayton', (0.25, 0.25), 'beta2', 100, 'rejection_Rn', 0.041),
    (8, 'gauss', (0.25, 0.25), 'beta2', 100, 'rejection_Rn', 0.033),
    (8, 'clayton', (0.25, 0.25), 'beta2', 200, 'rejection_Rn', 0.055),
    (8, 'gauss', (0.25, 0.25), 'beta2', 200, 'rejection_Rn', 0.048),
    (8, 'clayton', (0.25, 0.25), 'beta2', 400, 'rejection_Rn', 0.054),
    (8, 'gauss', (0.25, 0.25), 'beta2', 400, 'rejection_Rn', 0.059),
    (8, 'clayton', (0.5, 0.25), 'exchTest', 50, 'rejection_Rn', 0.047),
    (8, 'gauss', (0.5, 0.25), 'exchTest', 50, 'rejection_Rn', 0.052),
    (8, 'clayton', (0.5, 0.25), 'exchTest', 100, 'rejection_Rn', 0.09),
    (8, 'gauss', (0.5, 0.25), 'exchTest', 100, 'rejection_Rn', 0.078),
    (8, 'clayton', (0.5, 0.25), 'exchTest', 200, 'rejection_Rn', 0.197),
    (8, 'gauss', (0.5, 0.25), 'exchTest', 200, 'rejection_Rn', 0.188),
    (8, 'clayton', (0.5, 0.25), 'exchTest', 400, 'rejection_Rn', 0.449),
    (8, 'gauss', (0.5, 0.25), 'exchTest', 400, 'rejection_Rn', 0.401),
    (8, 'clayton', (0.5, 0.25), 'boot', 50, 'rejection_Rn', 0.004),
    (8, 'gauss', (0.5, 0.25), 'boot', 50, 'rejection_Rn', 0.007),
    (8, 'clayton', (0.5, 0.25), 'boot', 100, 'rejection_Rn', 0.041),
    (8, 'gauss', (0.5, 0.25), 'boot', 100, 'rejection_Rn', 0.028),
    (8, 'clayton', (0.5, 0.25), 'boot', 200, 'rejection_Rn', 0.145),
    (8, 'gauss', (0.5, 0.25), 'boot', 200, 'rejection_Rn', 0.136),
    (8, 'clayton', (0.5, 0.25), 'boot', 400, 'rejection_Rn', 0.407),
    (8, 'gauss', (0.5, 0.25), 'boot', 400, 'rejection_Rn', 0.366),
    (8, 'clayton', (0.5, 0.25), 'beta', 50, 'rejection_Rn', 0.06),
    (8, 'gauss', (0.5, 0.25), 'beta', 50, 'rejection_Rn', 0.061),
    (8, 'clayton', (0.5, 0.25), 'beta', 100, 'rejection_Rn', 0.1),
    (8, 'gauss', (0.5, 0.25), 'beta', 100, 'rejection_Rn', 0.088),
    (8, 'clayton', (0.5, 0.25), 'beta', 200, 'rejection_Rn', 0.216),
    (8, 'gauss', (0.5, 0.25), 'beta', 200, 'rejection_Rn', 0.198),
    (8, 'clayton', (0.5, 0.25), 'beta', 400, 'rejection_Rn', 0.469),
    (8, 'gauss', (0.5, 0.25), 'beta', 400, 'rejection_Rn', 0.433),
    (8, 'clayton', (0.5, 0.25), 'beta2', 50, 'rejection_Rn', 0.062),
    (8, 'gauss', (0.5, 0.25), 'beta2', 50, 'rejection_Rn', 0.065),
    (8, 'clayton', (0.5, 0.25), 'beta2', 100, 'rejection_Rn', 0.103),
    (8, 'gauss', (0.5, 0.25), 'beta2', 100, 'rejection_Rn', 0.098),
    (8, 'clayton', (0.5, 0.25), 'beta2', 200, 'rejection_Rn', 0.227),
    (8, 'gauss', (0.5, 0.25), 'beta2', 200, 'rejection_Rn', 0.212),
    (8, 'clayton', (0.5, 0.25), 'beta2', 400, 'rejection_Rn', 0.486),
    (8, 'gauss', (0.5, 0.25), 'beta2', 400, 'rejection_Rn', 0.441),
    (8, 'clayton', (0.75, 0.25), 'exchTest', 50, 'rejection_Rn', 0.199),
    (8, 'gauss', (0.75, 0.25), 'exchTest', 50, 'rejection_Rn', 0.205),
    (8, 'clayton', (0.75, 0.25), 'exchTest', 100, 'rejection_Rn', 0.63),
    (8, 'gauss', (0.75, 0.25), 'exchTest', 100, 'rejection_Rn', 0.637),
    (8, 'clayton', (0.75, 0.25), 'exchTest', 200, 'rejection_Rn', 0.985),
    (8, 'gauss', (0.75, 0.25), 'exchTest', 200, 'rejection_Rn', 0.973),
    (8, 'clayton', (0.75, 0.25), 'exchTest', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.25), 'exchTest', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.25), 'boot', 50, 'rejection_Rn', 0.038),
    (8, 'gauss', (0.75, 0.25), 'boot', 50, 'rejection_Rn', 0.051),
    (8, 'clayton', (0.75, 0.25), 'boot', 100, 'rejection_Rn', 0.38),
    (8, 'gauss', (0.75, 0.25), 'boot', 100, 'rejection_Rn', 0.338),
    (8, 'clayton', (0.75, 0.25), 'boot', 200, 'rejection_Rn', 0.949),
    (8, 'gauss', (0.75, 0.25), 'boot', 200, 'rejection_Rn', 0.921),
    (8, 'clayton', (0.75, 0.25), 'boot', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.25), 'boot', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.25), 'beta', 50, 'rejection_Rn', 0.227),
    (8, 'gauss', (0.75, 0.25), 'beta', 50, 'rejection_Rn', 0.208),
    (8, 'clayton', (0.75, 0.25), 'beta', 100, 'rejection_Rn', 0.637),
    (8, 'gauss', (0.75, 0.25), 'beta', 100, 'rejection_Rn', 0.614),
    (8, 'clayton', (0.75, 0.25), 'beta', 200, 'rejection_Rn', 0.981),
    (8, 'gauss', (0.75, 0.25), 'beta', 200, 'rejection_Rn', 0.974),
    (8, 'clayton', (0.75, 0.25), 'beta', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.25), 'beta', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.25), 'beta2', 50, 'rejection_Rn', 0.242),
    (8, 'gauss', (0.75, 0.25), 'beta2', 50, 'rejection_Rn', 0.225),
    (8, 'clayton', (0.75, 0.25), 'beta2', 100, 'rejection_Rn', 0.667),
    (8, 'gauss', (0.75, 0.25), 'beta2', 100, 'rejection_Rn', 0.639),
    (8, 'clayton', (0.75, 0.25), 'beta2', 200, 'rejection_Rn', 0.986),
    (8, 'gauss', (0.75, 0.25), 'beta2', 200, 'rejection_Rn', 0.986),
    (8, 'clayton', (0.75, 0.25), 'beta2', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.25), 'beta2', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.25, 0.5), 'exchTest', 50, 'rejection_Rn', 0.028),
    (8, 'gauss', (0.25, 0.5), 'exchTest', 50, 'rejection_Rn', 0.044),
    (8, 'clayton', (0.25, 0.5), 'exchTest', 100, 'rejection_Rn', 0.029),
    (8, 'gauss', (0.25, 0.5), 'exchTest', 100, 'rejection_Rn', 0.053),
    (8, 'clayton', (0.25, 0.5), 'exchTest', 200, 'rejection_Rn', 0.05),
    (8, 'gauss', (0.25, 0.5), 'exchTest', 200, 'rejection_Rn', 0.053),
    (8, 'clayton', (0.25, 0.5), 'exchTest', 400, 'rejection_Rn', 0.055),
    (8, 'gauss', (0.25, 0.5), 'exchTest', 400, 'rejection_Rn', 0.083),
    (8, 'clayton', (0.25, 0.5), 'boot', 50, 'rejection_Rn', 0.008),
    (8, 'gauss', (0.25, 0.5), 'boot', 50, 'rejection_Rn', 0.009),
    (8, 'clayton', (0.25, 0.5), 'boot', 100, 'rejection_Rn', 0.011),
    (8, 'gauss', (0.25, 0.5), 'boot', 100, 'rejection_Rn', 0.019),
    (8, 'clayton', (0.25, 0.5), 'boot', 200, 'rejection_Rn', 0.031),
    (8, 'gauss', (0.25, 0.5), 'boot', 200, 'rejection_Rn', 0.034),
    (8, 'clayton', (0.25, 0.5), 'boot', 400, 'rejection_Rn', 0.054),
    (8, 'gauss', (0.25, 0.5), 'boot', 400, 'rejection_Rn', 0.068),
    (8, 'clayton', (0.25, 0.5), 'beta', 50, 'rejection_Rn', 0.035),
    (8, 'gauss', (0.25, 0.5), 'beta', 50, 'rejection_Rn', 0.051),
    (8, 'clayton', (0.25, 0.5), 'beta', 100, 'rejection_Rn', 0.033),
    (8, 'gauss', (0.25, 0.5), 'beta', 100, 'rejection_Rn', 0.059),
    (8, 'clayton', (0.25, 0.5), 'beta', 200, 'rejection_Rn', 0.056),
    (8, 'gauss', (0.25, 0.5), 'beta', 200, 'rejection_Rn', 0.055),
    (8, 'clayton', (0.25, 0.5), 'beta', 400, 'rejection_Rn', 0.064),
    (8, 'gauss', (0.25, 0.5), 'beta', 400, 'rejection_Rn', 0.09),
    (8, 'clayton', (0.25, 0.5), 'beta2', 50, 'rejection_Rn', 0.038),
    (8, 'gauss', (0.25, 0.5), 'beta2', 50, 'rejection_Rn', 0.052),
    (8, 'clayton', (0.25, 0.5), 'beta2', 100, 'rejection_Rn', 0.037),
    (8, 'gauss', (0.25, 0.5), 'beta2', 100, 'rejection_Rn', 0.062),
    (8, 'clayton', (0.25, 0.5), 'beta2', 200, 'rejection_Rn', 0.059),
    (8, 'gauss', (0.25, 0.5), 'beta2', 200, 'rejection_Rn', 0.056),
    (8, 'clayton', (0.25, 0.5), 'beta2', 400, 'rejection_Rn', 0.064),
    (8, 'gauss', (0.25, 0.5), 'beta2', 400, 'rejection_Rn', 0.091),
    (8, 'clayton', (0.5, 0.5), 'exchTest', 50, 'rejection_Rn', 0.069),
    (8, 'gauss', (0.5, 0.5), 'exchTest', 50, 'rejection_Rn', 0.1),
    (8, 'clayton', (0.5, 0.5), 'exchTest', 100, 'rejection_Rn', 0.127),
    (8, 'gauss', (0.5, 0.5), 'exchTest', 100, 'rejection_Rn', 0.203),
    (8, 'clayton', (0.5, 0.5), 'exchTest', 200, 'rejection_Rn', 0.269),
    (8, 'gauss', (0.5, 0.5), 'exchTest', 200, 'rejection_Rn', 0.388),
    (8, 'clayton', (0.5, 0.5), 'exchTest', 400, 'rejection_Rn', 0.576),
    (8, 'gauss', (0.5, 0.5), 'exchTest', 400, 'rejection_Rn', 0.73),
    (8, 'clayton', (0.5, 0.5), 'boot', 50, 'rejection_Rn', 0.015),
    (8, 'gauss', (0.5, 0.5), 'boot', 50, 'rejection_Rn', 0.027),
    (8, 'clayton', (0.5, 0.5), 'boot', 100, 'rejection_Rn', 0.068),
    (8, 'gauss', (0.5, 0.5), 'boot', 100, 'rejection_Rn', 0.119),
    (8, 'clayton', (0.5, 0.5), 'boot', 200, 'rejection_Rn', 0.219),
    (8, 'gauss', (0.5, 0.5), 'boot', 200, 'rejection_Rn', 0.326),
    (8, 'clayton', (0.5, 0.5), 'boot', 400, 'rejection_Rn', 0.539),
    (8, 'gauss', (0.5, 0.5), 'boot', 400, 'rejection_Rn', 0.695),
    (8, 'clayton', (0.5, 0.5), 'beta', 50, 'rejection_Rn', 0.077),
    (8, 'gauss', (0.5, 0.5), 'beta', 50, 'rejection_Rn', 0.105),
    (8, 'clayton', (0.5, 0.5), 'beta', 100, 'rejection_Rn', 0.14),
    (8, 'gauss', (0.5, 0.5), 'beta', 100, 'rejection_Rn', 0.213),
    (8, 'clayton', (0.5, 0.5), 'beta', 200, 'rejection_Rn', 0.299),
    (8, 'gauss', (0.5, 0.5), 'beta', 200, 'rejection_Rn', 0.41),
    (8, 'clayton', (0.5, 0.5), 'beta', 400, 'rejection_Rn', 0.593),
    (8, 'gauss', (0.5, 0.5), 'beta', 400, 'rejection_Rn', 0.741),
    (8, 'clayton', (0.5, 0.5), 'beta2', 50, 'rejection_Rn', 0.075),
    (8, 'gauss', (0.5, 0.5), 'beta2', 50, 'rejection_Rn', 0.116),
    (8, 'clayton', (0.5, 0.5), 'beta2', 100, 'rejection_Rn', 0.144),
    (8, 'gauss', (0.5, 0.5), 'beta2', 100, 'rejection_Rn', 0.225),
    (8, 'clayton', (0.5, 0.5), 'beta2', 200, 'rejection_Rn', 0.306),
    (8, 'gauss', (0.5, 0.5), 'beta2', 200, 'rejection_Rn', 0.416),
    (8, 'clayton', (0.5, 0.5), 'beta2', 400, 'rejection_Rn', 0.602),
    (8, 'gauss', (0.5, 0.5), 'beta2', 400, 'rejection_Rn', 0.75),
    (8, 'clayton', (0.75, 0.5), 'exchTest', 50, 'rejection_Rn', 0.385),
    (8, 'gauss', (0.75, 0.5), 'exchTest', 50, 'rejection_Rn', 0.478),
    (8, 'clayton', (0.75, 0.5), 'exchTest', 100, 'rejection_Rn', 0.814),
    (8, 'gauss', (0.75, 0.5), 'exchTest', 100, 'rejection_Rn', 0.914),
    (8, 'clayton', (0.75, 0.5), 'exchTest', 200, 'rejection_Rn', 0.997),
    (8, 'gauss', (0.75, 0.5), 'exchTest', 200, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'exchTest', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.5), 'exchTest', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'boot', 50, 'rejection_Rn', 0.125),
    (8, 'gauss', (0.75, 0.5), 'boot', 50, 'rejection_Rn', 0.198),
    (8, 'clayton', (0.75, 0.5), 'boot', 100, 'rejection_Rn', 0.644),
    (8, 'gauss', (0.75, 0.5), 'boot', 100, 'rejection_Rn', 0.792),
    (8, 'clayton', (0.75, 0.5), 'boot', 200, 'rejection_Rn', 0.993),
    (8, 'gauss', (0.75, 0.5), 'boot', 200, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'boot', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.5), 'boot', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'beta', 50, 'rejection_Rn', 0.393),
    (8, 'gauss', (0.75, 0.5), 'beta', 50, 'rejection_Rn', 0.475),
    (8, 'clayton', (0.75, 0.5), 'beta', 100, 'rejection_Rn', 0.824),
    (8, 'gauss', (0.75, 0.5), 'beta', 100, 'rejection_Rn', 0.916),
    (8, 'clayton', (0.75, 0.5), 'beta', 200, 'rejection_Rn', 0.997),
    (8, 'gauss', (0.75, 0.5), 'beta', 200, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'beta', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.5), 'beta', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'beta2', 50, 'rejection_Rn', 0.425),
    (8, 'gauss', (0.75, 0.5), 'beta2', 50, 'rejection_Rn', 0.507),
    (8, 'clayton', (0.75, 0.5), 'beta2', 100, 'rejection_Rn', 0.833),
    (8, 'gauss', (0.75, 0.5), 'beta2', 100, 'rejection_Rn', 0.923),
    (8, 'clayton', (0.75, 0.5), 'beta2', 200, 'rejection_Rn', 0.998),
    (8, 'gauss', (0.75, 0.5), 'beta2', 200, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.5), 'beta2', 400, 'rejection_Rn', 1.0),
    (8, 'gauss', (0.75, 0.5), 'beta2', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.25, 0.75), 'exchTest', 50, 'rejection_Rn', 0.032),
    (8, 'gauss', (0.25, 0.75), 'exchTest', 50, 'rejection_Rn', 0.043),
    (8, 'clayton', (0.25, 0.75), 'exchTest', 100, 'rejection_Rn', 0.039),
    (8, 'gauss', (0.25, 0.75), 'exchTest', 100, 'rejection_Rn', 0.046),
    (8, 'clayton', (0.25, 0.75), 'exchTest', 200, 'rejection_Rn', 0.046),
    (8, 'gauss', (0.25, 0.75), 'exchTest', 200, 'rejection_Rn', 0.056),
    (8, 'clayton', (0.25, 0.75), 'exchTest', 400, 'rejection_Rn', 0.054),
    (8, 'gauss', (0.25, 0.75), 'exchTest', 400, 'rejection_Rn', 0.076),
    (8, 'clayton', (0.25, 0.75), 'boot', 50, 'rejection_Rn', 0.008),
    (8, 'gauss', (0.25, 0.75), 'boot', 50, 'rejection_Rn', 0.016),
    (8, 'clayton', (0.25, 0.75), 'boot', 100, 'rejection_Rn', 0.02),
    (8, 'gauss', (0.25, 0.75), 'boot', 100, 'rejection_Rn', 0.027),
    (8, 'clayton', (0.25, 0.75), 'boot', 200, 'rejection_Rn', 0.03),
    (8, 'gauss', (0.25, 0.75), 'boot', 200, 'rejection_Rn', 0.036),
    (8, 'clayton', (0.25, 0.75), 'boot', 400, 'rejection_Rn', 0.047),
    (8, 'gauss', (0.25, 0.75), 'boot', 400, 'rejection_Rn', 0.06),
    (8, 'clayton', (0.25, 0.75), 'beta', 50, 'rejection_Rn', 0.036),
    (8, 'gauss', (0.25, 0.75), 'beta', 50, 'rejection_Rn', 0.047),
    (8, 'clayton', (0.25, 0.75), 'beta', 100, 'rejection_Rn', 0.043),
    (8, 'gauss', (0.25, 0.75), 'beta', 100, 'rejection_Rn', 0.053),
    (8, 'clayton', (0.25, 0.75), 'beta', 200, 'rejection_Rn', 0.051),
    (8, 'gauss', (0.25, 0.75), 'beta', 200, 'rejection_Rn', 0.061),
    (8, 'clayton', (0.25, 0.75), 'beta', 400, 'rejection_Rn', 0.06),
    (8, 'gauss', (0.25, 0.75), 'beta', 400, 'rejection_Rn', 0.081),
    (8, 'clayton', (0.25, 0.75), 'beta2', 50, 'rejection_Rn', 0.039),
    (8, 'gauss', (0.25, 0.75), 'beta2', 50, 'rejection_Rn', 0.053),
    (8, 'clayton', (0.25, 0.75), 'beta2', 100, 'rejection_Rn', 0.045),
    (8, 'gauss', (0.25, 0.75), 'beta2', 100, 'rejection_Rn', 0.053),
    (8, 'clayton', (0.25, 0.75), 'beta2', 200, 'rejection_Rn', 0.054),
    (8, 'gauss', (0.25, 0.75), 'beta2', 200, 'rejection_Rn', 0.06),
    (8, 'clayton', (0.25, 0.75), 'beta2', 400, 'rejection_Rn', 0.058),
    (8, 'gauss', (0.25, 0.75), 'beta2', 400, 'rejection_Rn', 0.081),
    (8, 'clayton', (0.5, 0.75), 'exchTest', 50, 'rejection_Rn', 0.042),
    (8, 'gauss', (0.5, 0.75), 'exchTest', 50, 'rejection_Rn', 0.088),
    (8, 'clayton', (0.5, 0.75), 'exchTest', 100, 'rejection_Rn', 0.089),
    (8, 'gauss', (0.5, 0.75), 'exchTest', 100, 'rejection_Rn', 0.169),
    (8, 'clayton', (0.5, 0.75), 'exchTest', 200, 'rejection_Rn', 0.129),
    (8, 'gauss', (0.5, 0.75), 'exchTest', 200, 'rejection_Rn', 0.317),
    (8, 'clayton', (0.5, 0.75), 'exchTest', 400, 'rejection_Rn', 0.266),
    (8, 'gauss', (0.5, 0.75), 'exchTest', 400, 'rejection_Rn', 0.655),
    (8, 'clayton', (0.5, 0.75), 'boot', 50, 'rejection_Rn', 0.012),
    (8, 'gauss', (0.5, 0.75), 'boot', 50, 'rejection_Rn', 0.03),
    (8, 'clayton', (0.5, 0.75), 'boot', 100, 'rejection_Rn', 0.045),
    (8, 'gauss', (0.5, 0.75), 'boot', 100, 'rejection_Rn', 0.113),
    (8, 'clayton', (0.5, 0.75), 'boot', 200, 'rejection_Rn', 0.1),
    (8, 'gauss', (0.5, 0.75), 'boot', 200, 'rejection_Rn', 0.271),
    (8, 'clayton', (0.5, 0.75), 'boot', 400, 'rejection_Rn', 0.251),
    (8, 'gauss', (0.5, 0.75), 'boot', 400, 'rejection_Rn', 0.604),
    (8, 'clayton', (0.5, 0.75), 'beta', 50, 'rejection_Rn', 0.053),
    (8, 'gauss', (0.5, 0.75), 'beta', 50, 'rejection_Rn', 0.099),
    (8, 'clayton', (0.5, 0.75), 'beta', 100, 'rejection_Rn', 0.094),
    (8, 'gauss', (0.5, 0.75), 'beta', 100, 'rejection_Rn', 0.184),
    (8, 'clayton', (0.5, 0.75), 'beta', 200, 'rejection_Rn', 0.132),
    (8, 'gauss', (0.5, 0.75), 'beta', 200, 'rejection_Rn', 0.342),
    (8, 'clayton', (0.5, 0.75), 'beta', 400, 'rejection_Rn', 0.279),
    (8, 'gauss', (0.5, 0.75), 'beta', 400, 'rejection_Rn', 0.66),
    (8, 'clayton', (0.5, 0.75), 'beta2', 50, 'rejection_Rn', 0.053),
    (8, 'gauss', (0.5, 0.75), 'beta2', 50, 'rejection_Rn', 0.102),
    (8, 'clayton', (0.5, 0.75), 'beta2', 100, 'rejection_Rn', 0.102),
    (8, 'gauss', (0.5, 0.75), 'beta2', 100, 'rejection_Rn', 0.194),
    (8, 'clayton', (0.5, 0.75), 'beta2', 200, 'rejection_Rn', 0.14),
    (8, 'gauss', (0.5, 0.75), 'beta2', 200, 'rejection_Rn', 0.354),
    (8, 'clayton', (0.5, 0.75), 'beta2', 400, 'rejection_Rn', 0.287),
    (8, 'gauss', (0.5, 0.75), 'beta2', 400, 'rejection_Rn', 0.67),
    (8, 'clayton', (0.75, 0.75), 'exchTest', 50, 'rejection_Rn', 0.144),
    (8, 'gauss', (0.75, 0.75), 'exchTest', 50, 'rejection_Rn', 0.369),
    (8, 'clayton', (0.75, 0.75), 'exchTest', 100, 'rejection_Rn', 0.372),
    (8, 'gauss', (0.75, 0.75), 'exchTest', 100, 'rejection_Rn', 0.636),
    (8, 'clayton', (0.75, 0.75), 'exchTest', 200, 'rejection_Rn', 0.693),
    (8, 'gauss', (0.75, 0.75), 'exchTest', 200, 'rejection_Rn', 0.947),
    (8, 'clayton', (0.75, 0.75), 'exchTest', 400, 'rejection_Rn', 0.962),
    (8, 'gauss', (0.75, 0.75), 'exchTest', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.75), 'boot', 50, 'rejection_Rn', 0.051),
    (8, 'gauss', (0.75, 0.75), 'boot', 50, 'rejection_Rn', 0.133),
    (8, 'clayton', (0.75, 0.75), 'boot', 100, 'rejection_Rn', 0.268),
    (8, 'gauss', (0.75, 0.75), 'boot', 100, 'rejection_Rn', 0.51),
    (8, 'clayton', (0.75, 0.75), 'boot', 200, 'rejection_Rn', 0.645),
    (8, 'gauss', (0.75, 0.75), 'boot', 200, 'rejection_Rn', 0.918),
    (8, 'clayton', (0.75, 0.75), 'boot', 400, 'rejection_Rn', 0.958),
    (8, 'gauss', (0.75, 0.75), 'boot', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.75), 'beta', 50, 'rejection_Rn', 0.156),
    (8, 'gauss', (0.75, 0.75), 'beta', 50, 'rejection_Rn', 0.303),
    (8, 'clayton', (0.75, 0.75), 'beta', 100, 'rejection_Rn', 0.382),
    (8, 'gauss', (0.75, 0.75), 'beta', 100, 'rejection_Rn', 0.637),
    (8, 'clayton', (0.75, 0.75), 'beta', 200, 'rejection_Rn', 0.72),
    (8, 'gauss', (0.75, 0.75), 'beta', 200, 'rejection_Rn', 0.95),
    (8, 'clayton', (0.75, 0.75), 'beta', 400, 'rejection_Rn', 0.965),
    (8, 'gauss', (0.75, 0.75), 'beta', 400, 'rejection_Rn', 1.0),
    (8, 'clayton', (0.75, 0.75), 'beta2', 50, 'rejection_Rn', 0.169),
    (8, 'gauss', (0.75, 0.75), 'beta2', 50, 'rejection_Rn', 0.334),
    (8, 'clayton', (0.75, 0.75), 'beta2', 100, 'rejection_Rn', 0.402),
    (8, 'gauss', (0.75, 0.75), 'beta2', 100, 'rejection_Rn', 0.664),
    (8, 'clayton', (0.75, 0.75), 'beta2', 200, 'rejection_Rn', 0.727),
    (8, 'gauss', (0.75, 0.75), 'beta2', 200, 'rejection_Rn', 0.954),
    (8, 'clayton', (0.75, 0.75), 'beta2', 400, 'rejection_Rn', 0.966),
    (8, 'gauss', (0.75, 0.75), 'beta2', 400, 'rejection_Rn', 1.0),
)

def _key(param):
    if isinstance(param, tuple):
        return tuple(round(float(p), 6) for p in param)
    return round(float(param), 6)


_INDEX = {(t, f, _key(p), s, n, m): v for (t, f, p, s, n, m, v) in ENTRIES}


def published(table: int, family: str, param, scheme: str, n: int, metric: str) -> float:
    """Published value of one cell; raises KeyError if the cell does not exist."""
    return _INDEX[(table, family, _key(param), scheme, n, metric)]


def cells(table: int) -> list:
    return [e for e in ENTRIES if e[0] == table]
