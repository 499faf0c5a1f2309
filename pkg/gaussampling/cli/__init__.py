'''
Management commands running every diagnostic as a reproducible batch job.
'''
