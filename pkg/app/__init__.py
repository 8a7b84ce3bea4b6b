"""DFS 编码簇态上的单向量子计算模拟器"""
