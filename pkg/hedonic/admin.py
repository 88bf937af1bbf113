# File: admin.py
# Description: Django admin configuration for browsing stored run records.

from django.contrib import admin

from .models import RunRecord


@admin.register(RunRecord)
class RunRecordAdmin(admin.ModelAdmin):
    """Admin interface for RunRecord model"""
    list_display = ['instance_name', 'scheduler', 'seed', 'status', 'steps', 'cycle_length', 'created_at']
    list_filter = ['status', 'scheduler', 'created_at']
    search_fields = ['instance_name']
    ordering = ['-created_at', '-id']
    date_hierarchy = 'created_at'
    readonly_fields = ['summary', 'created_at', 'updated_at']

    fieldsets = (
        ('Instance', {
            'fields': ('instance_name', 'players')
        }),
        ('Run Settings', {
            'fields': ('scheduler', 'seed', 'max_steps')
        }),
        ('Outcome', {
            'fields': ('status', 'steps', 'cycle_length', 'summary')
        }),
        ('Timestamps', {
            'fields': ('created_at', 'updated_at'),
            'classes': ('collapse',)
        }),
    )
