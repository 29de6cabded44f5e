"""Tests for src.pipeline"""
