'''
for imports
'''
