"""Tests for src.groups"""
