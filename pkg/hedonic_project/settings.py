"""
Django settings for hedonic_project project.

Hosts the hedonic app: an engine for individual-stability dynamics in graph
hedonic games, driven through management commands.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-6w$k2h0q!hedonic-dev-only-r9v#t3m1x8p4z7c5n2b0',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', '1') == '1'

ALLOWED_HOSTS = ['localhost', '127.0.0.1']


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'hedonic',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'hedonic_project.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'hedonic_project.wsgi.application'


# Database
# Run records are the only persisted objects.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


STATIC_URL = 'static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Hedonic engine
# Enumeration caps are counted in players. Paths get a larger cap because
# their feasible partitions are interval partitions (2^(n-1) states).

HEDONIC_MAX_ENUM = int(os.environ.get('HEDONIC_MAX_ENUM', 10))
HEDONIC_PATH_MAX_ENUM = int(os.environ.get('HEDONIC_PATH_MAX_ENUM', 14))
HEDONIC_COALITION_CAP = int(os.environ.get('HEDONIC_COALITION_CAP', 24))

# Default truncation for runs: HEDONIC_STEP_FACTOR * n^2 deviations.
HEDONIC_STEP_FACTOR = 4

# Soft bound on non-go-alone deviations of converging star runs (c * n^2).
HEDONIC_STAR_CONSTANT = 2

HEDONIC_LOG_LEVEL = os.environ.get('HEDONIC_LOG_LEVEL', 'WARNING')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'hedonic': {
            'handlers': ['console'],
            'level': HEDONIC_LOG_LEVEL,
            'propagate': False,
        },
    },
}
