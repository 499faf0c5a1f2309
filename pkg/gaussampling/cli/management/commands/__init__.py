'''
One module per diagnostic; each reads the section named after it.
'''
