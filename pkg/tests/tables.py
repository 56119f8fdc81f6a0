"""First rows of known [68,34,12] and [72,36,12] group-ring codes.

Each entry: (label, group id, blocks, form, gamma, beta_or_alpha, aut_order).
"""

TABLE_ROWS = [
    # D34, W68_2, gamma = 0
    ("68-C1", "D:34", ["00001110111111101", "11001111001110010"], "W68_2", 0, 34, 34),
    ("68-C2", "D:34", ["11001111001000111", "00101001011000101"], "W68_2", 0, 51, 34),
    ("68-C3", "D:34", ["10011110111001000", "10101111011011101"], "W68_2", 0, 68, 34),
    ("68-C4", "D:34", ["00100000010110000", "01001001111110001"], "W68_2", 0, 85, 34),
    ("68-C5", "D:34", ["00001000001000101", "00101111010100011"], "W68_2", 0, 119, 34),
    ("68-C6", "D:34", ["00010101111101011", "00011001100110100"], "W68_2", 0, 153, 34),
    ("68-C7", "D:34", ["11000111000000101", "11010100000000110"], "W68_2", 0, 136, 34),
    ("68-C8", "D:34", ["01100001100010101", "11010001100111011"], "W68_2", 0, 187, 34),
    ("68-C9", "D:34", ["01011001011001100", "11101011110000010"], "W68_2", 0, 221, 34),
    ("68-C10", "D:34", ["00001100000111000", "00110000001101111"], "W68_2", 0, 238, 34),
    ("68-C11", "D:34", ["00001011110100011", "10101110101000011"], "W68_2", 0, 255, 34),
]

TABLE_ROWS_72 = [
    # C2 x C18
    ("72-C1", "CxC:2x18", ["111100111100001010", "000100100110101100"], "W72_1", 0, 201, 72),
    ("72-C2", "CxC:2x18", ["111001111110100101", "101101111001001000"], "W72_1", 36, 471, 72),
    # C18,2
    ("72-C3", "C18_2", ["100000110111101100", "100100011111111011"], "W72_1", 72, 825, 72),
    # C4 x C9
    ("72-C4", "CxC:4x9", ["010011010", "100111100", "000101110", "011100100"], "W72_1", 36, 441, 72),
    ("72-C5", "CxC:4x9", ["000101110", "100110110", "111100100", "101011010"], "TypeII72", None, -2772, 72),
    # C3 x C12
    ("72-C6", "CxC:3x12", ["100001111110", "100110010110", "001011111011"], "W72_1", 36, 456, 72),
    ("72-C7", "CxC:3x12", ["110100011111", "111111010001", "101011101010"], "TypeII72", None, -2106, 144),
    ("72-C8", "CxC:3x12", ["101010011110", "000111111110", "011110111100"], "TypeII72", None, -2322, 144),
    ("72-C9", "CxC:3x12", ["011100111111", "000100000001", "010011001000"], "TypeII72", None, -2472, 144),
    ("72-C10", "CxC:3x12", ["011010110100", "011110000110", "011111010100"], "TypeII72", None, -2520, 144),
    ("72-C11", "CxC:3x12", ["010110011100", "011111111000", "010100111000"], "TypeII72", None, -2550, 144),
    ("72-C12", "CxC:3x12", ["101100001100", "101101110000", "000101011000"], "TypeII72", None, -3030, 72),
    ("72-C13", "CxC:3x12", ["010011010100", "001110101010", "111110010101"], "TypeII72", None, -3954, 144),
    # D36
    ("72-C14", "D:36", ["110011110110100111", "010101101110000011"], "W72_1", 0, 354, 36),
    ("72-C15", "D:36", ["100110011111010100", "011101101010100111"], "W72_1", 18, 273, 36),
    ("72-C16", "D:36", ["000001001111000100", "001101101111101100"], "W72_1", 36, 372, 36),
    ("72-C17", "D:36", ["010010011010001111", "101101000010100101"], "W72_1", 54, 669, 36),
]
