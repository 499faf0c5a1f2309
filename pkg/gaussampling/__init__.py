'''
Sampling and uniqueness diagnostics for shift-invariant spaces generated by
the Gaussian.

The numerical packages (``core_series``, ``point_sets``,
``frame_estimator``, ``annihilator_factory``, ``trajectory`` and
``gabor``) are plain libraries; ``cli`` exposes them as management
commands.
'''
