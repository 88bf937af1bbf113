"""
WSGI entry point for hedonic_project (serves the admin site for run records).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hedonic_project.settings')

application = get_wsgi_application()
