# Generated by Django 5.2.8 on 2026-10-19 10:12

import django.core.validators
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='RunRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('instance_name', models.CharField(help_text='Catalog name or file path of the instance', max_length=200)),
                ('scheduler', models.CharField(help_text='Scheduler policy used for the run', max_length=20)),
                ('seed', models.IntegerField(blank=True, help_text='Seed of the random scheduler, if any', null=True)),
                ('status', models.CharField(choices=[('converged', 'Converged'), ('cycle-detected', 'Cycle detected'), ('truncated', 'Truncated')], help_text='How the run ended', max_length=20)),
                ('steps', models.IntegerField(help_text='Number of deviations applied', validators=[django.core.validators.MinValueValidator(0)])),
                ('max_steps', models.IntegerField(help_text='Truncation limit of the run', validators=[django.core.validators.MinValueValidator(0)])),
                ('players', models.IntegerField(help_text='Number of players', validators=[django.core.validators.MinValueValidator(2)])),
                ('cycle_length', models.IntegerField(blank=True, help_text='Length of the detected cycle', null=True)),
                ('summary', models.JSONField(default=dict, help_text='Run summary as printed by the run command')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'ordering': ['-created_at', '-id'],
            },
        ),
    ]
