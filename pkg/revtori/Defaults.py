"""
Default parameters
"""
# Info
__author__ = 'Revtori Developers'

# Imports
from collections import OrderedDict

# Algebra tolerances
default_tolerance = 1e-12
default_axis_tolerance = 1e-12

# Finite difference parameters
default_jet_step = 1e-5
default_curvature_step = 1e-3
default_curvature_inner = 0.1

# Conformality thresholds for curvature output
default_nonconformal_threshold = 1e-3
default_tag_threshold = 1e-6

# Spectral data
default_lattice_tolerance = 1e-9
default_cmc_tolerance = 1e-9
default_cylinder_spread_min = 1e-3

# Singularity detection
default_branch_threshold = 1e-10
default_denominator_grid = 4096
default_denominator_epsilon = 1e-12
default_denominator_refine = 0.01
default_q_epsilon = 1e-12

# Sampling
default_seed = 0
default_grid = (64, 64)
default_sample_count = 1000
default_pipeline_grid = (32, 32)
default_membership_grid = (128, 128)
default_profile_rows = 256

# Stereographic projection
default_pole = (-1.0, 0.0, 0.0, 0.0)
default_min_pole_distance = 0.05

# Sweep defaults
default_sweep_count = 50
default_sweep_umax = 4.0

# Worker environment variable
default_thread_env = 'DARBOUX_THREADS'

# Commandline argument defaults
default_out_args = {'log_file':None,
                    'out_dir':None,
                    'out_name':None,
                    'timings':False}

# Tolerances of the named verification checks
default_tolerances = OrderedDict([('algebra_real_part', 1e-12),
                                  ('bulge_extrema', 1e-8),
                                  ('cmc_criterion', 1e-9),
                                  ('conformality', 1e-6),
                                  ('cylinder_periodicity', 1e-10),
                                  ('cylinder_round', 1e-6),
                                  ('cylinder_sections', 1e-6),
                                  ('cylinder_multiplier', 1e-9),
                                  ('holomorphic_sections', 1e-6),
                                  ('mean_curvature_frame', 1e-9),
                                  ('mean_curvature_numeric', 1e-4),
                                  ('mean_curvature_special', 1e-12),
                                  ('monochromatic', 1e-5),
                                  ('multiplier', 1e-9),
                                  ('periodicity', 1e-10),
                                  ('pipeline_polychromatic', 1e-8),
                                  ('pipeline_prolongation', 1e-8),
                                  ('pipeline_scaling', 1e-10),
                                  ('revolution_profiles', 1e-10),
                                  ('s3_membership', 1e-10),
                                  ('spectral_unit_circle', 1e-12),
                                  ('tau_identity', 1e-12),
                                  ('tau_norm', 1e-12),
                                  ('torus_mean_curvature', 1e-5),
                                  ('torus_normals', 1e-8)])

# Figure parameter sets as (u, v, n) for tori and (u, a) for cylinders
default_figure_sets = OrderedDict([('fig1', [(1.8, 1.0, 2), (2.1, 1.0, 2)]),
                                   ('fig2', [(2.6, 1.0, 2)]),
                                   ('fig3', [(2.9, 1.0, 3), (3.2, 1.0, 3), (3.5, 1.0, 3)]),
                                   ('fig4', [(4.3, 1.0, 4), (5.3, 1.0, 4), (6.3, 1.0, 4)])])
default_cylinder_figure_sets = OrderedDict([('fig5', [(2.1, 1.0), (2.9, 1.0)])])
