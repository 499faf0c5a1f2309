'''
Sampling along families of parallel lines: arc-length integrals, separated
discretisations and the lifted annihilators of sparse rational families.
'''
