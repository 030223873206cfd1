"""
创建日期：2026年02月11日
介绍：配置、异常、精确线性代数与命令行描述的解析
"""
