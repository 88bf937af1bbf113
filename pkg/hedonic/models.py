# File: models.py
# Description: Persisted run records. A RunRecord keeps the settings and the
# summary of one run of the dynamics so results can be browsed in the admin.

from django.core.validators import MinValueValidator
from django.db import models


class RunRecord(models.Model):
    """
    Model representing one run of the IS dynamics.
    The summary field holds the same JSON the run command prints.
    """
    STATUS_CHOICES = [
        ('converged', 'Converged'),
        ('cycle-detected', 'Cycle detected'),
        ('truncated', 'Truncated'),
    ]

    instance_name = models.CharField(max_length=200, help_text="Catalog name or file path of the instance")
    scheduler = models.CharField(max_length=20, help_text="Scheduler policy used for the run")
    seed = models.IntegerField(blank=True, null=True, help_text="Seed of the random scheduler, if any")
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, help_text="How the run ended")
    steps = models.IntegerField(validators=[MinValueValidator(0)], help_text="Number of deviations applied")
    max_steps = models.IntegerField(validators=[MinValueValidator(0)], help_text="Truncation limit of the run")
    players = models.IntegerField(validators=[MinValueValidator(2)], help_text="Number of players")
    cycle_length = models.IntegerField(blank=True, null=True, help_text="Length of the detected cycle")
    summary = models.JSONField(default=dict, help_text="Run summary as printed by the run command")
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['-created_at', '-id']

    def __str__(self):
        return f"{self.instance_name} ({self.scheduler}): {self.get_status_display()} after {self.steps} steps"

    @classmethod
    def from_outcome(cls, instance_name, g, outcome, scheduler, seed=None, max_steps=None):
        """Unsaved record for a RunOutcome"""
        return cls(
            instance_name=instance_name,
            scheduler=scheduler,
            seed=seed,
            status=outcome.status.value,
            steps=outcome.steps,
            max_steps=max_steps if max_steps is not None else outcome.steps,
            players=g.n,
            cycle_length=outcome.cycle_length,
            summary=outcome.summary(g),
        )

    def is_converged(self):
        return self.status == 'converged'
