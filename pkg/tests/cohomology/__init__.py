"""Tests for src.cohomology"""
