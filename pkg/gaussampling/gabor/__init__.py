'''
Gabor systems with Gaussian windows over rational time-frequency lattices,
judged through the sampling of the unit-cell translates of their time
plane.
'''
