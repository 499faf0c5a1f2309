'''
Finite-section estimates of sampling constants and least-squares
reconstruction.
'''
