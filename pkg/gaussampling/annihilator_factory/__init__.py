'''
Explicit nonzero functions of the Gaussian spaces that vanish on prescribed
sets: the alternating theta comb, the product construction for sets of
counting density below one, and their lifts to the plane.
'''
