"""
URL configuration for hedonic_project project.

The engine is driven from management commands; the only web surface is the
admin site, where stored run records can be browsed.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
