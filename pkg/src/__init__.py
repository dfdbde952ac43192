"""cmposet - 次元 2 の半順序集合と置換グラフの Cohen-Macaulay 判定"""

__version__ = "0.1.0"
