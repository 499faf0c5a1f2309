'''
Evaluation of Gaussian shift-invariant series at real and complex arguments,
with truncation certificates and norm diagnostics.
'''
