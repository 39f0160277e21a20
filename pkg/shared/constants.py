"""
共享常量定义

数值容差集中在这里, 各模块只引用名字, 不写魔法数字.
"""

# 密度矩阵校验: 厄米性(逐元素最大偏差)与迹
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
# 最小本征值下限, 低于 -POSITIVITY_TOL 视为非物理
POSITIVITY_TOL = 1e-9
# Tr(P rho) 虚部超过该值说明输入不是厄米矩阵
IMAGINARY_TOL = 1e-9

# Kraus 完备性 ||sum E^dag E - I||_max
KRAUS_COMPLETENESS_TOL = 1e-10
UNITARY_TOL = 1e-12

# 精确流水线中 M 最后一行与 (0,...,0,1) 的最大偏差
LAST_ROW_TOL = 1e-10
# 条件数超过该值视为奇异基
MAX_CONDITION_NUMBER = 1e12

# Born 规则概率的负值截断阈值, 更负直接报错
PROBABILITY_CLAMP = 1e-12

# 拟合结果的平局判定
FIT_TIE_TOL = 1e-12
# 精确模式下退相干判别的默认容差
EXACT_DISCRIMINATION_TOL = 1e-6
# 统计模式下判别容差的默认 sigma 倍数
DEFAULT_SIGMA_LEVEL = 3.0

# 默认比特数上限
DEFAULT_MAX_QUBITS = 5

# CSV 输出的有效数字位数
CSV_SIGNIFICANT_DIGITS = 17
