"""Tests for src.extensions"""
