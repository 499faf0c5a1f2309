'''
Lets ``pytest`` run the same suites as ``python manage.py test``.
'''
import os

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gaussampling.settings')
