"""判定アルゴリズムのサービス群"""
