'''
Separated point sets on the line, slanted configurations in the plane,
families of parallel lines and their density diagnostics.
'''
