"""Unicode 17.0.0 Word_Break and Extended_Pictographic property ranges.

Generated by tools/gen_wordbreak_tables.py; do not edit by hand.
Ranges are (first, last, category) with inclusive endpoints, sorted by
first codepoint; codepoints not covered have category 'Other'.
"""

UNICODE_VERSION = (17, 0, 0)

WORD_BREAK_RANGES = (
    (0x0000A, 0x0000A, 'LF'),
    (0x0000B, 0x0000C, 'Newline'),
    (0x0000D, 0x0000D, 'CR'),
    (0x00020, 0x00020, 'WSegSpace'),
    (0x00022, 0x00022, 'Double_Quote'),
    (0x00027, 0x00027, 'Single_Quote'),
    (0x0002C, 0x0002C, 'MidNum'),
    (0x0002E, 0x0002E, 'MidNumLet'),
    (0x00030, 0x00039, 'Numeric'),
    (0x0003A, 0x0003A, 'MidLetter'),
    (0x0003B, 0x0003B, 'MidNum'),
    (0x00041, 0x0005A, 'ALetter'),
    (0x0005F, 0x0005F, 'ExtendNumLet'),
    (0x00061, 0x0007A, 'ALetter'),
    (0x00085, 0x00085, 'Newline'),
    (0x000AA, 0x000AA, 'ALetter'),
    (0x000AD, 0x000AD, 'Format'),
    (0x000B5, 0x000B5, 'ALetter'),
    (0x000B7, 0x000B7, 'MidLetter'),
    (0x000B8, 0x000B8, 'ALetter'),
    (0x000BA, 0x000BA, 'ALetter'),
    (0x000C0, 0x000D6, 'ALetter'),
    (0x000D8, 0x000F6, 'ALetter'),
    (0x000F8, 0x002D7, 'ALetter'),
    (0x002DE, 0x002FF, 'ALetter'),
    (0x00300, 0x0036F, 'Extend'),
    (0x00370, 0x00374, 'ALetter'),
    (0x00376, 0x00377, 'ALetter'),
    (0x0037A, 0x0037D, 'ALetter'),
    (0x0037E, 0x0037E, 'MidNum'),
    (0x0037F, 0x0037F, 'ALetter'),
    (0x00386, 0x00386, 'ALetter'),
    (0x00387, 0x00387, 'MidLetter'),
    (0x00388, 0x0038A, 'ALetter'),
    (0x0038C, 0x0038C, 'ALetter'),
    (0x0038E, 0x003A1, 'ALetter'),
    (0x003A3, 0x003F5, 'ALetter'),
    (0x003F7, 0x00481, 'ALetter'),
    (0x00483, 0x00489, 'Extend'),
    (0x0048A, 0x0052F, 'ALetter'),
    (0x00531, 0x00556, 'ALetter'),
    (0x00559, 0x0055C, 'ALetter'),
    (0x0055E, 0x0055E, 'ALetter'),
    (0x0055F, 0x0055F, 'MidLetter'),
    (0x00560, 0x00588, 'ALetter'),
    (0x00589, 0x00589, 'MidNum'),
    (0x0058A, 0x0058A, 'ALetter'),
    (0x00591, 0x005BD, 'Extend'),
    (0x005BF, 0x005BF, 'Extend'),
    (0x005C1, 0x005C2, 'Extend'),
    (0x005C4, 0x005C5, 'Extend'),
    (0x005C7, 0x005C7, 'Extend'),
    (0x005D0, 0x005EA, 'Hebrew_Letter'),
    (0x005EF, 0x005F2, 'Hebrew_Letter'),
    (0x005F3, 0x005F3, 'ALetter'),
    (0x005F4, 0x005F4, 'MidLetter'),
    (0x00600, 0x00605, 'Numeric'),
    (0x0060C, 0x0060D, 'MidNum'),
    (0x00610, 0x0061A, 'Extend'),
    (0x0061C, 0x0061C, 'Format'),
    (0x00620, 0x0064A, 'ALetter'),
    (0x0064B, 0x0065F, 'Extend'),
    (0x00660, 0x00669, 'Numeric'),
    (0x0066B, 0x0066B, 'Numeric'),
    (0x0066C, 0x0066C, 'MidNum'),
    (0x0066E, 0x0066F, 'ALetter'),
    (0x00670, 0x00670, 'Extend'),
    (0x00671, 0x006D3, 'ALetter'),
    (0x006D5, 0x006D5, 'ALetter'),
    (0x006D6, 0x006DC, 'Extend'),
    (0x006DD, 0x006DD, 'Numeric'),
    (0x006DF, 0x006E4, 'Extend'),
    (0x006E5, 0x006E6, 'ALetter'),
    (0x006E7, 0x006E8, 'Extend'),
    (0x006EA, 0x006ED, 'Extend'),
    (0x006EE, 0x006EF, 'ALetter'),
    (0x006F0, 0x006F9, 'Numeric'),
    (0x006FA, 0x006FC, 'ALetter'),
    (0x006FF, 0x006FF, 'ALetter'),
    (0x0070F, 0x00710, 'ALetter'),
    (0x00711, 0x00711, 'Extend'),
    (0x00712, 0x0072F, 'ALetter'),
    (0x00730, 0x0074A, 'Extend'),
    (0x0074D, 0x007A5, 'ALetter'),
    (0x007A6, 0x007B0, 'Extend'),
    (0x007B1, 0x007B1, 'ALetter'),
    (0x007C0, 0x007C9, 'Numeric'),
    (0x007CA, 0x007EA, 'ALetter'),
    (0x007EB, 0x007F3, 'Extend'),
    (0x007F4, 0x007F5, 'ALetter'),
    (0x007F8, 0x007F8, 'MidNum'),
    (0x007FA, 0x007FA, 'ALetter'),
    (0x007FD, 0x007FD, 'Extend'),
    (0x00800, 0x00815, 'ALetter'),
    (0x00816, 0x00819, 'Extend'),
    (0x0081A, 0x0081A, 'ALetter'),
    (0x0081B, 0x00823, 'Extend'),
    (0x00824, 0x00824, 'ALetter'),
    (0x00825, 0x00827, 'Extend'),
    (0x00828, 0x00828, 'ALetter'),
    (0x00829, 0x0082D, 'Extend'),
    (0x00840, 0x00858, 'ALetter'),
    (0x00859, 0x0085B, 'Extend'),
    (0x00860, 0x0086A, 'ALetter'),
    (0x00870, 0x00887, 'ALetter'),
    (0x00889, 0x0088F, 'ALetter'),
    (0x00890, 0x00891, 'Numeric'),
    (0x00897, 0x0089F, 'Extend'),
    (0x008A0, 0x008C9, 'ALetter'),
    (0x008CA, 0x008E1, 'Extend'),
    (0x008E2, 0x008E2, 'Numeric'),
    (0x008E3, 0x00903, 'Extend'),
    (0x00904, 0x00939, 'ALetter'),
    (0x0093A, 0x0093C, 'Extend'),
    (0x0093D, 0x0093D, 'ALetter'),
    (0x0093E, 0x0094F, 'Extend'),
    (0x00950, 0x00950, 'ALetter'),
    (0x00951, 0x00957, 'Extend'),
    (0x00958, 0x00961, 'ALetter'),
    (0x00962, 0x00963, 'Extend'),
    (0x00966, 0x0096F, 'Numeric'),
    (0x00971, 0x00980, 'ALetter'),
    (0x00981, 0x00983, 'Extend'),
    (0x00985, 0x0098C, 'ALetter'),
    (0x0098F, 0x00990, 'ALetter'),
    (0x00993, 0x009A8, 'ALetter'),
    (0x009AA, 0x009B0, 'ALetter'),
    (0x009B2, 0x009B2, 'ALetter'),
    (0x009B6, 0x009B9, 'ALetter'),
    (0x009BC, 0x009BC, 'Extend'),
    (0x009BD, 0x009BD, 'ALetter'),
    (0x009BE, 0x009C4, 'Extend'),
    (0x009C7, 0x009C8, 'Extend'),
    (0x009CB, 0x009CD, 'Extend'),
    (0x009CE, 0x009CE, 'ALetter'),
    (0x009D7, 0x009D7, 'Extend'),
    (0x009DC, 0x009DD, 'ALetter'),
    (0x009DF, 0x009E1, 'ALetter'),
    (0x009E2, 0x009E3, 'Extend'),
    (0x009E6, 0x009EF, 'Numeric'),
    (0x009F0, 0x009F1, 'ALetter'),
    (0x009FC, 0x009FC, 'ALetter'),
    (0x009FE, 0x009FE, 'Extend'),
    (0x00A01, 0x00A03, 'Extend'),
    (0x00A05, 0x00A0A, 'ALetter'),
    (0x00A0F, 0x00A10, 'ALetter'),
    (0x00A13, 0x00A28, 'ALetter'),
    (0x00A2A, 0x00A30, 'ALetter'),
    (0x00A32, 0x00A33, 'ALetter'),
    (0x00A35, 0x00A36, 'ALetter'),
    (0x00A38, 0x00A39, 'ALetter'),
    (0x00A3C, 0x00A3C, 'Extend'),
    (0x00A3E, 0x00A42, 'Extend'),
    (0x00A47, 0x00A48, 'Extend'),
    (0x00A4B, 0x00A4D, 'Extend'),
    (0x00A51, 0x00A51, 'Extend'),
    (0x00A59, 0x00A5C, 'ALetter'),
    (0x00A5E, 0x00A5E, 'ALetter'),
    (0x00A66, 0x00A6F, 'Numeric'),
    (0x00A70, 0x00A71, 'Extend'),
    (0x00A72, 0x00A74, 'ALetter'),
    (0x00A75, 0x00A75, 'Extend'),
    (0x00A81, 0x00A83, 'Extend'),
    (0x00A85, 0x00A8D, 'ALetter'),
    (0x00A8F, 0x00A91, 'ALetter'),
    (0x00A93, 0x00AA8, 'ALetter'),
    (0x00AAA, 0x00AB0, 'ALetter'),
    (0x00AB2, 0x00AB3, 'ALetter'),
    (0x00AB5, 0x00AB9, 'ALetter'),
    (0x00ABC, 0x00ABC, 'Extend'),
    (0x00ABD, 0x00ABD, 'ALetter'),
    (0x00ABE, 0x00AC5, 'Extend'),
    (0x00AC7, 0x00AC9, 'Extend'),
    (0x00ACB, 0x00ACD, 'Extend'),
    (0x00AD0, 0x00AD0, 'ALetter'),
    (0x00AE0, 0x00AE1, 'ALetter'),
    (0x00AE2, 0x00AE3, 'Extend'),
    (0x00AE6, 0x00AEF, 'Numeric'),
    (0x00AF9, 0x00AF9, 'ALetter'),
    (0x00AFA, 0x00AFF, 'Extend'),
    (0x00B01, 0x00B03, 'Extend'),
    (0x00B05, 0x00B0C, 'ALetter'),
    (0x00B0F, 0x00B10, 'ALetter'),
    (0x00B13, 0x00B28, 'ALetter'),
    (0x00B2A, 0x00B30, 'ALetter'),
    (0x00B32, 0x00B33, 'ALetter'),
    (0x00B35, 0x00B39, 'ALetter'),
    (0x00B3C, 0x00B3C, 'Extend'),
    (0x00B3D, 0x00B3D, 'ALetter'),
    (0x00B3E, 0x00B44, 'Extend'),
    (0x00B47, 0x00B48, 'Extend'),
    (0x00B4B, 0x00B4D, 'Extend'),
    (0x00B55, 0x00B57, 'Extend'),
    (0x00B5C, 0x00B5D, 'ALetter'),
    (0x00B5F, 0x00B61, 'ALetter'),
    (0x00B62, 0x00B63, 'Extend'),
    (0x00B66, 0x00B6F, 'Numeric'),
    (0x00B71, 0x00B71, 'ALetter'),
    (0x00B82, 0x00B82, 'Extend'),
    (0x00B83, 0x00B83, 'ALetter'),
    (0x00B85, 0x00B8A, 'ALetter'),
    (0x00B8E, 0x00B90, 'ALetter'),
    (0x00B92, 0x00B95, 'ALetter'),
    (0x00B99, 0x00B9A, 'ALetter'),
    (0x00B9C, 0x00B9C, 'ALetter'),
    (0x00B9E, 0x00B9F, 'ALetter'),
    (0x00BA3, 0x00BA4, 'ALetter'),
    (0x00BA8, 0x00BAA, 'ALetter'),
    (0x00BAE, 0x00BB9, 'ALetter'),
    (0x00BBE, 0x00BC2, 'Extend'),
    (0x00BC6, 0x00BC8, 'Extend'),
    (0x00BCA, 0x00BCD, 'Extend'),
    (0x00BD0, 0x00BD0, 'ALetter'),
    (0x00BD7, 0x00BD7, 'Extend'),
    (0x00BE6, 0x00BEF, 'Numeric'),
    (0x00C00, 0x00C04, 'Extend'),
    (0x00C05, 0x00C0C, 'ALetter'),
    (0x00C0E, 0x00C10, 'ALetter'),
    (0x00C12, 0x00C28, 'ALetter'),
    (0x00C2A, 0x00C39, 'ALetter'),
    (0x00C3C, 0x00C3C, 'Extend'),
    (0x00C3D, 0x00C3D, 'ALetter'),
    (0x00C3E, 0x00C44, 'Extend'),
    (0x00C46, 0x00C48, 'Extend'),
    (0x00C4A, 0x00C4D, 'Extend'),
    (0x00C55, 0x00C56, 'Extend'),
    (0x00C58, 0x00C5A, 'ALetter'),
    (0x00C5C, 0x00C5D, 'ALetter'),
    (0x00C60, 0x00C61, 'ALetter'),
    (0x00C62, 0x00C63, 'Extend'),
    (0x00C66, 0x00C6F, 'Numeric'),
    (0x00C80, 0x00C80, 'ALetter'),
    (0x00C81, 0x00C83, 'Extend'),
    (0x00C85, 0x00C8C, 'ALetter'),
    (0x00C8E, 0x00C90, 'ALetter'),
    (0x00C92, 0x00CA8, 'ALetter'),
    (0x00CAA, 0x00CB3, 'ALetter'),
    (0x00CB5, 0x00CB9, 'ALetter'),
    (0x00CBC, 0x00CBC, 'Extend'),
    (0x00CBD, 0x00CBD, 'ALetter'),
    (0x00CBE, 0x00CC4, 'Extend'),
    (0x00CC6, 0x00CC8, 'Extend'),
    (0x00CCA, 0x00CCD, 'Extend'),
    (0x00CD5, 0x00CD6, 'Extend'),
    (0x00CDC, 0x00CDE, 'ALetter'),
    (0x00CE0, 0x00CE1, 'ALetter'),
    (0x00CE2, 0x00CE3, 'Extend'),
    (0x00CE6, 0x00CEF, 'Numeric'),
    (0x00CF1, 0x00CF2, 'ALetter'),
    (0x00CF3, 0x00CF3, 'Extend'),
    (0x00D00, 0x00D03, 'Extend'),
    (0x00D04, 0x00D0C, 'ALetter'),
    (0x00D0E, 0x00D10, 'ALetter'),
    (0x00D12, 0x00D3A, 'ALetter'),
    (0x00D3B, 0x00D3C, 'Extend'),
    (0x00D3D, 0x00D3D, 'ALetter'),
    (0x00D3E, 0x00D44, 'Extend'),
    (0x00D46, 0x00D48, 'Extend'),
    (0x00D4A, 0x00D4D, 'Extend'),
    (0x00D4E, 0x00D4E, 'ALetter'),
    (0x00D54, 0x00D56, 'ALetter'),
    (0x00D57, 0x00D57, 'Extend'),
    (0x00D5F, 0x00D61, 'ALetter'),
    (0x00D62, 0x00D63, 'Extend'),
    (0x00D66, 0x00D6F, 'Numeric'),
    (0x00D7A, 0x00D7F, 'ALetter'),
    (0x00D81, 0x00D83, 'Extend'),
    (0x00D85, 0x00D96, 'ALetter'),
    (0x00D9A, 0x00DB1, 'ALetter'),
    (0x00DB3, 0x00DBB, 'ALetter'),
    (0x00DBD, 0x00DBD, 'ALetter'),
    (0x00DC0, 0x00DC6, 'ALetter'),
    (0x00DCA, 0x00DCA, 'Extend'),
    (0x00DCF, 0x00DD4, 'Extend'),
    (0x00DD6, 0x00DD6, 'Extend'),
    (0x00DD8, 0x00DDF, 'Extend'),
    (0x00DE6, 0x00DEF, 'Numeric'),
    (0x00DF2, 0x00DF3, 'Extend'),
    (0x00E31, 0x00E31, 'Extend'),
    (0x00E34, 0x00E3A, 'Extend'),
    (0x00E47, 0x00E4E, 'Extend'),
    (0x00E50, 0x00E59, 'Numeric'),
    (0x00EB1, 0x00EB1, 'Extend'),
    (0x00EB4, 0x00EBC, 'Extend'),
    (0x00EC8, 0x00ECE, 'Extend'),
    (0x00ED0, 0x00ED9, 'Numeric'),
    (0x00F00, 0x00F00, 'ALetter'),
    (0x00F18, 0x00F19, 'Extend'),
    (0x00F20, 0x00F29, 'Numeric'),
    (0x00F35, 0x00F35, 'Extend'),
    (0x00F37, 0x00F37, 'Extend'),
    (0x00F39, 0x00F39, 'Extend'),
    (0x00F3E, 0x00F3F, 'Extend'),
    (0x00F40, 0x00F47, 'ALetter'),
    (0x00F49, 0x00F6C, 'ALetter'),
    (0x00F71, 0x00F84, 'Extend'),
    (0x00F86, 0x00F87, 'Extend'),
    (0x00F88, 0x00F8C, 'ALetter'),
    (0x00F8D, 0x00F97, 'Extend'),
    (0x00F99, 0x00FBC, 'Extend'),
    (0x00FC6, 0x00FC6, 'Extend'),
    (0x0102B, 0x0103E, 'Extend'),
    (0x01040, 0x01049, 'Numeric'),
    (0x01056, 0x01059, 'Extend'),
    (0x0105E, 0x01060, 'Extend'),
    (0x01062, 0x01064, 'Extend'),
    (0x01067, 0x0106D, 'Extend'),
    (0x01071, 0x01074, 'Extend'),
    (0x01082, 0x0108D, 'Extend'),
    (0x0108F, 0x0108F, 'Extend'),
    (0x01090, 0x01099, 'Numeric'),
    (0x0109A, 0x0109D, 'Extend'),
    (0x010A0, 0x010C5, 'ALetter'),
    (0x010C7, 0x010C7, 'ALetter'),
    (0x010CD, 0x010CD, 'ALetter'),
    (0x010D0, 0x010FA, 'ALetter'),
    (0x010FC, 0x01248, 'ALetter'),
    (0x0124A, 0x0124D, 'ALetter'),
    (0x01250, 0x01256, 'ALetter'),
    (0x01258, 0x01258, 'ALetter'),
    (0x0125A, 0x0125D, 'ALetter'),
    (0x01260, 0x01288, 'ALetter'),
    (0x0128A, 0x0128D, 'ALetter'),
    (0x01290, 0x012B0, 'ALetter'),
    (0x012B2, 0x012B5, 'ALetter'),
    (0x012B8, 0x012BE, 'ALetter'),
    (0x012C0, 0x012C0, 'ALetter'),
    (0x012C2, 0x012C5, 'ALetter'),
    (0x012C8, 0x012D6, 'ALetter'),
    (0x012D8, 0x01310, 'ALetter'),
    (0x01312, 0x01315, 'ALetter'),
    (0x01318, 0x0135A, 'ALetter'),
    (0x0135D, 0x0135F, 'Extend'),
    (0x01380, 0x0138F, 'ALetter'),
    (0x013A0, 0x013F5, 'ALetter'),
    (0x013F8, 0x013FD, 'ALetter'),
    (0x01401, 0x0166C, 'ALetter'),
    (0x0166F, 0x0167F, 'ALetter'),
    (0x01680, 0x01680, 'WSegSpace'),
    (0x01681, 0x0169A, 'ALetter'),
    (0x016A0, 0x016EA, 'ALetter'),
    (0x016EE, 0x016F8, 'ALetter'),
    (0x01700, 0x01711, 'ALetter'),
    (0x01712, 0x01715, 'Extend'),
    (0x0171F, 0x01731, 'ALetter'),
    (0x01732, 0x01734, 'Extend'),
    (0x01740, 0x01751, 'ALetter'),
    (0x01752, 0x01753, 'Extend'),
    (0x01760, 0x0176C, 'ALetter'),
    (0x0176E, 0x01770, 'ALetter'),
    (0x01772, 0x01773, 'Extend'),
    (0x017B4, 0x017D3, 'Extend'),
    (0x017DD, 0x017DD, 'Extend'),
    (0x017E0, 0x017E9, 'Numeric'),
    (0x0180B, 0x0180D, 'Extend'),
    (0x0180E, 0x0180E, 'Format'),
    (0x0180F, 0x0180F, 'Extend'),
    (0x01810, 0x01819, 'Numeric'),
    (0x01820, 0x01878, 'ALetter'),
    (0x01880, 0x01884, 'ALetter'),
    (0x01885, 0x01886, 'Extend'),
    (0x01887, 0x018A8, 'ALetter'),
    (0x018A9, 0x018A9, 'Extend'),
    (0x018AA, 0x018AA, 'ALetter'),
    (0x018B0, 0x018F5, 'ALetter'),
    (0x01900, 0x0191E, 'ALetter'),
    (0x01920, 0x0192B, 'Extend'),
    (0x01930, 0x0193B, 'Extend'),
    (0x01946, 0x0194F, 'Numeric'),
    (0x019D0, 0x019DA, 'Numeric'),
    (0x01A00, 0x01A16, 'ALetter'),
    (0x01A17, 0x01A1B, 'Extend'),
    (0x01A55, 0x01A5E, 'Extend'),
    (0x01A60, 0x01A7C, 'Extend'),
    (0x01A7F, 0x01A7F, 'Extend'),
    (0x01A80, 0x01A89, 'Numeric'),
    (0x01A90, 0x01A99, 'Numeric'),
    (0x01AB0, 0x01ADD, 'Extend'),
    (0x01AE0, 0x01AEB, 'Extend'),
    (0x01B00, 0x01B04, 'Extend'),
    (0x01B05, 0x01B33, 'ALetter'),
    (0x01B34, 0x01B44, 'Extend'),
    (0x01B45, 0x01B4C, 'ALetter'),
    (0x01B50, 0x01B59, 'Numeric'),
    (0x01B6B, 0x01B73, 'Extend'),
    (0x01B80, 0x01B82, 'Extend'),
    (0x01B83, 0x01BA0, 'ALetter'),
    (0x01BA1, 0x01BAD, 'Extend'),
    (0x01BAE, 0x01BAF, 'ALetter'),
    (0x01BB0, 0x01BB9, 'Numeric'),
    (0x01BBA, 0x01BE5, 'ALetter'),
    (0x01BE6, 0x01BF3, 'Extend'),
    (0x01C00, 0x01C23, 'ALetter'),
    (0x01C24, 0x01C37, 'Extend'),
    (0x01C40, 0x01C49, 'Numeric'),
    (0x01C4D, 0x01C4F, 'ALetter'),
    (0x01C50, 0x01C59, 'Numeric'),
    (0x01C5A, 0x01C7D, 'ALetter'),
    (0x01C80, 0x01C8A, 'ALetter'),
    (0x01C90, 0x01CBA, 'ALetter'),
    (0x01CBD, 0x01CBF, 'ALetter'),
    (0x01CD0, 0x01CD2, 'Extend'),
    (0x01CD4, 0x01CE8, 'Extend'),
    (0x01CE9, 0x01CEC, 'ALetter'),
    (0x01CED, 0x01CED, 'Extend'),
    (0x01CEE, 0x01CF3, 'ALetter'),
    (0x01CF4, 0x01CF4, 'Extend'),
    (0x01CF5, 0x01CF6, 'ALetter'),
    (0x01CF7, 0x01CF9, 'Extend'),
    (0x01CFA, 0x01CFA, 'ALetter'),
    (0x01D00, 0x01DBF, 'ALetter'),
    (0x01DC0, 0x01DFF, 'Extend'),
    (0x01E00, 0x01F15, 'ALetter'),
    (0x01F18, 0x01F1D, 'ALetter'),
    (0x01F20, 0x01F45, 'ALetter'),
    (0x01F48, 0x01F4D, 'ALetter'),
    (0x01F50, 0x01F57, 'ALetter'),
    (0x01F59, 0x01F59, 'ALetter'),
    (0x01F5B, 0x01F5B, 'ALetter'),
    (0x01F5D, 0x01F5D, 'ALetter'),
    (0x01F5F, 0x01F7D, 'ALetter'),
    (0x01F80, 0x01FB4, 'ALetter'),
    (0x01FB6, 0x01FBC, 'ALetter'),
    (0x01FBE, 0x01FBE, 'ALetter'),
    (0x01FC2, 0x01FC4, 'ALetter'),
    (0x01FC6, 0x01FCC, 'ALetter'),
    (0x01FD0, 0x01FD3, 'ALetter'),
    (0x01FD6, 0x01FDB, 'ALetter'),
    (0x01FE0, 0x01FEC, 'ALetter'),
    (0x01FF2, 0x01FF4, 'ALetter'),
    (0x01FF6, 0x01FFC, 'ALetter'),
    (0x02000, 0x02006, 'WSegSpace'),
    (0x02008, 0x0200A, 'WSegSpace'),
    (0x0200C, 0x0200C, 'Extend'),
    (0x0200D, 0x0200D, 'ZWJ'),
    (0x0200E, 0x0200F, 'Format'),
    (0x02018, 0x02019, 'MidNumLet'),
    (0x02024, 0x02024, 'MidNumLet'),
    (0x02027, 0x02027, 'MidLetter'),
    (0x02028, 0x02029, 'Newline'),
    (0x0202A, 0x0202E, 'Format'),
    (0x0202F, 0x0202F, 'ExtendNumLet'),
    (0x0203F, 0x02040, 'ExtendNumLet'),
    (0x02044, 0x02044, 'MidNum'),
    (0x02054, 0x02054, 'ExtendNumLet'),
    (0x0205F, 0x0205F, 'WSegSpace'),
    (0x02060, 0x02064, 'Format'),
    (0x02066, 0x0206F, 'Format'),
    (0x02071, 0x02071, 'ALetter'),
    (0x0207F, 0x0207F, 'ALetter'),
    (0x02090, 0x0209C, 'ALetter'),
    (0x020D0, 0x020F0, 'Extend'),
    (0x02102, 0x02102, 'ALetter'),
    (0x02107, 0x02107, 'ALetter'),
    (0x0210A, 0x02113, 'ALetter'),
    (0x02115, 0x02115, 'ALetter'),
    (0x02119, 0x0211D, 'ALetter'),
    (0x02124, 0x02124, 'ALetter'),
    (0x02126, 0x02126, 'ALetter'),
    (0x02128, 0x02128, 'ALetter'),
    (0x0212A, 0x0212D, 'ALetter'),
    (0x0212F, 0x02139, 'ALetter'),
    (0x0213C, 0x0213F, 'ALetter'),
    (0x02145, 0x02149, 'ALetter'),
    (0x0214E, 0x0214E, 'ALetter'),
    (0x02160, 0x02188, 'ALetter'),
    (0x024B6, 0x024E9, 'ALetter'),
    (0x02C00, 0x02CE4, 'ALetter'),
    (0x02CEB, 0x02CEE, 'ALetter'),
    (0x02CEF, 0x02CF1, 'Extend'),
    (0x02CF2, 0x02CF3, 'ALetter'),
    (0x02D00, 0x02D25, 'ALetter'),
    (0x02D27, 0x02D27, 'ALetter'),
    (0x02D2D, 0x02D2D, 'ALetter'),
    (0x02D30, 0x02D67, 'ALetter'),
    (0x02D6F, 0x02D6F, 'ALetter'),
    (0x02D7F, 0x02D7F, 'Extend'),
    (0x02D80, 0x02D96, 'ALetter'),
    (0x02DA0, 0x02DA6, 'ALetter'),
    (0x02DA8, 0x02DAE, 'ALetter'),
    (0x02DB0, 0x02DB6, 'ALetter'),
    (0x02DB8, 0x02DBE, 'ALetter'),
    (0x02DC0, 0x02DC6, 'ALetter'),
    (0x02DC8, 0x02DCE, 'ALetter'),
    (0x02DD0, 0x02DD6, 'ALetter'),
    (0x02DD8, 0x02DDE, 'ALetter'),
    (0x02DE0, 0x02DFF, 'Extend'),
    (0x02E2F, 0x02E2F, 'ALetter'),
    (0x03000, 0x03000, 'WSegSpace'),
    (0x03005, 0x03005, 'ALetter'),
    (0x0302A, 0x0302F, 'Extend'),
    (0x03031, 0x03035, 'Katakana'),
    (0x0303B, 0x0303C, 'ALetter'),
    (0x03099, 0x0309A, 'Extend'),
    (0x0309B, 0x0309C, 'Katakana'),
    (0x030A0, 0x030FA, 'Katakana'),
    (0x030FC, 0x030FF, 'Katakana'),
    (0x03105, 0x0312F, 'ALetter'),
    (0x03131, 0x0318E, 'ALetter'),
    (0x031A0, 0x031BF, 'ALetter'),
    (0x031F0, 0x031FF, 'Katakana'),
    (0x032D0, 0x032FE, 'Katakana'),
    (0x03300, 0x03357, 'Katakana'),
    (0x0A000, 0x0A48C, 'ALetter'),
    (0x0A4D0, 0x0A4FD, 'ALetter'),
    (0x0A500, 0x0A60C, 'ALetter'),
    (0x0A610, 0x0A61F, 'ALetter'),
    (0x0A620, 0x0A629, 'Numeric'),
    (0x0A62A, 0x0A62B, 'ALetter'),
    (0x0A640, 0x0A66E, 'ALetter'),
    (0x0A66F, 0x0A672, 'Extend'),
    (0x0A674, 0x0A67D, 'Extend'),
    (0x0A67F, 0x0A69D, 'ALetter'),
    (0x0A69E, 0x0A69F, 'Extend'),
    (0x0A6A0, 0x0A6EF, 'ALetter'),
    (0x0A6F0, 0x0A6F1, 'Extend'),
    (0x0A708, 0x0A7DC, 'ALetter'),
    (0x0A7F1, 0x0A801, 'ALetter'),
    (0x0A802, 0x0A802, 'Extend'),
    (0x0A803, 0x0A805, 'ALetter'),
    (0x0A806, 0x0A806, 'Extend'),
    (0x0A807, 0x0A80A, 'ALetter'),
    (0x0A80B, 0x0A80B, 'Extend'),
    (0x0A80C, 0x0A822, 'ALetter'),
    (0x0A823, 0x0A827, 'Extend'),
    (0x0A82C, 0x0A82C, 'Extend'),
    (0x0A840, 0x0A873, 'ALetter'),
    (0x0A880, 0x0A881, 'Extend'),
    (0x0A882, 0x0A8B3, 'ALetter'),
    (0x0A8B4, 0x0A8C5, 'Extend'),
    (0x0A8D0, 0x0A8D9, 'Numeric'),
    (0x0A8E0, 0x0A8F1, 'Extend'),
    (0x0A8F2, 0x0A8F7, 'ALetter'),
    (0x0A8FB, 0x0A8FB, 'ALetter'),
    (0x0A8FD, 0x0A8FE, 'ALetter'),
    (0x0A8FF, 0x0A8FF, 'Extend'),
    (0x0A900, 0x0A909, 'Numeric'),
    (0x0A90A, 0x0A925, 'ALetter'),
    (0x0A926, 0x0A92D, 'Extend'),
    (0x0A930, 0x0A946, 'ALetter'),
    (0x0A947, 0x0A953, 'Extend'),
    (0x0A960, 0x0A97C, 'ALetter'),
    (0x0A980, 0x0A983, 'Extend'),
    (0x0A984, 0x0A9B2, 'ALetter'),
    (0x0A9B3, 0x0A9C0, 'Extend'),
    (0x0A9CF, 0x0A9CF, 'ALetter'),
    (0x0A9D0, 0x0A9D9, 'Numeric'),
    (0x0A9E5, 0x0A9E5, 'Extend'),
    (0x0A9F0, 0x0A9F9, 'Numeric'),
    (0x0AA00, 0x0AA28, 'ALetter'),
    (0x0AA29, 0x0AA36, 'Extend'),
    (0x0AA40, 0x0AA42, 'ALetter'),
    (0x0AA43, 0x0AA43, 'Extend'),
    (0x0AA44, 0x0AA4B, 'ALetter'),
    (0x0AA4C, 0x0AA4D, 'Extend'),
    (0x0AA50, 0x0AA59, 'Numeric'),
    (0x0AA7B, 0x0AA7D, 'Extend'),
    (0x0AAB0, 0x0AAB0, 'Extend'),
    (0x0AAB2, 0x0AAB4, 'Extend'),
    (0x0AAB7, 0x0AAB8, 'Extend'),
    (0x0AABE, 0x0AABF, 'Extend'),
    (0x0AAC1, 0x0AAC1, 'Extend'),
    (0x0AAE0, 0x0AAEA, 'ALetter'),
    (0x0AAEB, 0x0AAEF, 'Extend'),
    (0x0AAF2, 0x0AAF4, 'ALetter'),
    (0x0AAF5, 0x0AAF6, 'Extend'),
    (0x0AB01, 0x0AB06, 'ALetter'),
    (0x0AB09, 0x0AB0E, 'ALetter'),
    (0x0AB11, 0x0AB16, 'ALetter'),
    (0x0AB20, 0x0AB26, 'ALetter'),
    (0x0AB28, 0x0AB2E, 'ALetter'),
    (0x0AB30, 0x0AB69, 'ALetter'),
    (0x0AB70, 0x0ABE2, 'ALetter'),
    (0x0ABE3, 0x0ABEA, 'Extend'),
    (0x0ABEC, 0x0ABED, 'Extend'),
    (0x0ABF0, 0x0ABF9, 'Numeric'),
    (0x0AC00, 0x0D7A3, 'ALetter'),
    (0x0D7B0, 0x0D7C6, 'ALetter'),
    (0x0D7CB, 0x0D7FB, 'ALetter'),
    (0x0FB00, 0x0FB06, 'ALetter'),
    (0x0FB13, 0x0FB17, 'ALetter'),
    (0x0FB1D, 0x0FB1D, 'Hebrew_Letter'),
    (0x0FB1E, 0x0FB1E, 'Extend'),
    (0x0FB1F, 0x0FB28, 'Hebrew_Letter'),
    (0x0FB2A, 0x0FB36, 'Hebrew_Letter'),
    (0x0FB38, 0x0FB3C, 'Hebrew_Letter'),
    (0x0FB3E, 0x0FB3E, 'Hebrew_Letter'),
    (0x0FB40, 0x0FB41, 'Hebrew_Letter'),
    (0x0FB43, 0x0FB44, 'Hebrew_Letter'),
    (0x0FB46, 0x0FB4F, 'Hebrew_Letter'),
    (0x0FB50, 0x0FBB1, 'ALetter'),
    (0x0FBD3, 0x0FD3D, 'ALetter'),
    (0x0FD50, 0x0FD8F, 'ALetter'),
    (0x0FD92, 0x0FDC7, 'ALetter'),
    (0x0FDF0, 0x0FDFB, 'ALetter'),
    (0x0FE00, 0x0FE0F, 'Extend'),
    (0x0FE13, 0x0FE13, 'MidLetter'),
    (0x0FE20, 0x0FE2F, 'Extend'),
    (0x0FE33, 0x0FE34, 'ExtendNumLet'),
    (0x0FE4D, 0x0FE4F, 'ExtendNumLet'),
    (0x0FE50, 0x0FE50, 'MidNum'),
    (0x0FE52, 0x0FE52, 'MidNumLet'),
    (0x0FE54, 0x0FE54, 'MidNum'),
    (0x0FE55, 0x0FE55, 'MidLetter'),
    (0x0FE70, 0x0FE74, 'ALetter'),
    (0x0FE76, 0x0FEFC, 'ALetter'),
    (0x0FEFF, 0x0FEFF, 'Format'),
    (0x0FF07, 0x0FF07, 'MidNumLet'),
    (0x0FF0C, 0x0FF0C, 'MidNum'),
    (0x0FF0E, 0x0FF0E, 'MidNumLet'),
    (0x0FF10, 0x0FF19, 'Numeric'),
    (0x0FF1A, 0x0FF1A, 'MidLetter'),
    (0x0FF1B, 0x0FF1B, 'MidNum'),
    (0x0FF21, 0x0FF3A, 'ALetter'),
    (0x0FF3F, 0x0FF3F, 'ExtendNumLet'),
    (0x0FF41, 0x0FF5A, 'ALetter'),
    (0x0FF66, 0x0FF9D, 'Katakana'),
    (0x0FF9E, 0x0FF9F, 'Extend'),
    (0x0FFA0, 0x0FFBE, 'ALetter'),
    (0x0FFC2, 0x0FFC7, 'ALetter'),
    (0x0FFCA, 0x0FFCF, 'ALetter'),
    (0x0FFD2, 0x0FFD7, 'ALetter'),
    (0x0FFDA, 0x0FFDC, 'ALetter'),
    (0x0FFF9, 0x0FFFB, 'Format'),
    (0x10000, 0x1000B, 'ALetter'),
    (0x1000D, 0x10026, 'ALetter'),
    (0x10028, 0x1003A, 'ALetter'),
    (0x1003C, 0x1003D, 'ALetter'),
    (0x1003F, 0x1004D, 'ALetter'),
    (0x10050, 0x1005D, 'ALetter'),
    (0x10080, 0x100FA, 'ALetter'),
    (0x10140, 0x10174, 'ALetter'),
    (0x101FD, 0x101FD, 'Extend'),
    (0x10280, 0x1029C, 'ALetter'),
    (0x102A0, 0x102D0, 'ALetter'),
    (0x102E0, 0x102E0, 'Extend'),
    (0x10300, 0x1031F, 'ALetter'),
    (0x1032D, 0x1034A, 'ALetter'),
    (0x10350, 0x10375, 'ALetter'),
    (0x10376, 0x1037A, 'Extend'),
    (0x10380, 0x1039D, 'ALetter'),
    (0x103A0, 0x103C3, 'ALetter'),
    (0x103C8, 0x103CF, 'ALetter'),
    (0x103D1, 0x103D5, 'ALetter'),
    (0x10400, 0x1049D, 'ALetter'),
    (0x104A0, 0x104A9, 'Numeric'),
    (0x104B0, 0x104D3, 'ALetter'),
    (0x104D8, 0x104FB, 'ALetter'),
    (0x10500, 0x10527, 'ALetter'),
    (0x10530, 0x10563, 'ALetter'),
    (0x10570, 0x1057A, 'ALetter'),
    (0x1057C, 0x1058A, 'ALetter'),
    (0x1058C, 0x10592, 'ALetter'),
    (0x10594, 0x10595, 'ALetter'),
    (0x10597, 0x105A1, 'ALetter'),
    (0x105A3, 0x105B1, 'ALetter'),
    (0x105B3, 0x105B9, 'ALetter'),
    (0x105BB, 0x105BC, 'ALetter'),
    (0x105C0, 0x105F3, 'ALetter'),
    (0x10600, 0x10736, 'ALetter'),
    (0x10740, 0x10755, 'ALetter'),
    (0x10760, 0x10767, 'ALetter'),
    (0x10780, 0x10785, 'ALetter'),
    (0x10787, 0x107B0, 'ALetter'),
    (0x107B2, 0x107BA, 'ALetter'),
    (0x10800, 0x10805, 'ALetter'),
    (0x10808, 0x10808, 'ALetter'),
    (0x1080A, 0x10835, 'ALetter'),
    (0x10837, 0x10838, 'ALetter'),
    (0x1083C, 0x1083C, 'ALetter'),
    (0x1083F, 0x10855, 'ALetter'),
    (0x10860, 0x10876, 'ALetter'),
    (0x10880, 0x1089E, 'ALetter'),
    (0x108E0, 0x108F2, 'ALetter'),
    (0x108F4, 0x108F5, 'ALetter'),
    (0x10900, 0x10915, 'ALetter'),
    (0x10920, 0x10939, 'ALetter'),
    (0x10940, 0x10959, 'ALetter'),
    (0x10980, 0x109B7, 'ALetter'),
    (0x109BE, 0x109BF, 'ALetter'),
    (0x10A00, 0x10A00, 'ALetter'),
    (0x10A01, 0x10A03, 'Extend'),
    (0x10A05, 0x10A06, 'Extend'),
    (0x10A0C, 0x10A0F, 'Extend'),
    (0x10A10, 0x10A13, 'ALetter'),
    (0x10A15, 0x10A17, 'ALetter'),
    (0x10A19, 0x10A35, 'ALetter'),
    (0x10A38, 0x10A3A, 'Extend'),
    (0x10A3F, 0x10A3F, 'Extend'),
    (0x10A60, 0x10A7C, 'ALetter'),
    (0x10A80, 0x10A9C, 'ALetter'),
    (0x10AC0, 0x10AC7, 'ALetter'),
    (0x10AC9, 0x10AE4, 'ALetter'),
    (0x10AE5, 0x10AE6, 'Extend'),
    (0x10B00, 0x10B35, 'ALetter'),
    (0x10B40, 0x10B55, 'ALetter'),
    (0x10B60, 0x10B72, 'ALetter'),
    (0x10B80, 0x10B91, 'ALetter'),
    (0x10C00, 0x10C48, 'ALetter'),
    (0x10C80, 0x10CB2, 'ALetter'),
    (0x10CC0, 0x10CF2, 'ALetter'),
    (0x10D00, 0x10D23, 'ALetter'),
    (0x10D24, 0x10D27, 'Extend'),
    (0x10D30, 0x10D39, 'Numeric'),
    (0x10D40, 0x10D49, 'Numeric'),
    (0x10D4A, 0x10D65, 'ALetter'),
    (0x10D69, 0x10D6D, 'Extend'),
    (0x10D6F, 0x10D85, 'ALetter'),
    (0x10E80, 0x10EA9, 'ALetter'),
    (0x10EAB, 0x10EAC, 'Extend'),
    (0x10EB0, 0x10EB1, 'ALetter'),
    (0x10EC2, 0x10EC7, 'ALetter'),
    (0x10EFA, 0x10EFF, 'Extend'),
    (0x10F00, 0x10F1C, 'ALetter'),
    (0x10F27, 0x10F27, 'ALetter'),
    (0x10F30, 0x10F45, 'ALetter'),
    (0x10F46, 0x10F50, 'Extend'),
    (0x10F70, 0x10F81, 'ALetter'),
    (0x10F82, 0x10F85, 'Extend'),
    (0x10FB0, 0x10FC4, 'ALetter'),
    (0x10FE0, 0x10FF6, 'ALetter'),
    (0x11000, 0x11002, 'Extend'),
    (0x11003, 0x11037, 'ALetter'),
    (0x11038, 0x11046, 'Extend'),
    (0x11066, 0x1106F, 'Numeric'),
    (0x11070, 0x11070, 'Extend'),
    (0x11071, 0x11072, 'ALetter'),
    (0x11073, 0x11074, 'Extend'),
    (0x11075, 0x11075, 'ALetter'),
    (0x1107F, 0x11082, 'Extend'),
    (0x11083, 0x110AF, 'ALetter'),
    (0x110B0, 0x110BA, 'Extend'),
    (0x110BD, 0x110BD, 'Numeric'),
    (0x110C2, 0x110C2, 'Extend'),
    (0x110CD, 0x110CD, 'Numeric'),
    (0x110D0, 0x110E8, 'ALetter'),
    (0x110F0, 0x110F9, 'Numeric'),
    (0x11100, 0x11102, 'Extend'),
    (0x11103, 0x11126, 'ALetter'),
    (0x11127, 0x11134, 'Extend'),
    (0x11136, 0x1113F, 'Numeric'),
    (0x11144, 0x11144, 'ALetter'),
    (0x11145, 0x11146, 'Extend'),
    (0x11147, 0x11147, 'ALetter'),
    (0x11150, 0x11172, 'ALetter'),
    (0x11173, 0x11173, 'Extend'),
    (0x11176, 0x11176, 'ALetter'),
    (0x11180, 0x11182, 'Extend'),
    (0x11183, 0x111B2, 'ALetter'),
    (0x111B3, 0x111C0, 'Extend'),
    (0x111C1, 0x111C4, 'ALetter'),
    (0x111C9, 0x111CC, 'Extend'),
    (0x111CE, 0x111CF, 'Extend'),
    (0x111D0, 0x111D9, 'Numeric'),
    (0x111DA, 0x111DA, 'ALetter'),
    (0x111DC, 0x111DC, 'ALetter'),
    (0x11200, 0x11211, 'ALetter'),
    (0x11213, 0x1122B, 'ALetter'),
    (0x1122C, 0x11237, 'Extend'),
    (0x1123E, 0x1123E, 'Extend'),
    (0x1123F, 0x11240, 'ALetter'),
    (0x11241, 0x11241, 'Extend'),
    (0x11280, 0x11286, 'ALetter'),
    (0x11288, 0x11288, 'ALetter'),
    (0x1128A, 0x1128D, 'ALetter'),
    (0x1128F, 0x1129D, 'ALetter'),
    (0x1129F, 0x112A8, 'ALetter'),
    (0x112B0, 0x112DE, 'ALetter'),
    (0x112DF, 0x112EA, 'Extend'),
    (0x112F0, 0x112F9, 'Numeric'),
    (0x11300, 0x11303, 'Extend'),
    (0x11305, 0x1130C, 'ALetter'),
    (0x1130F, 0x11310, 'ALetter'),
    (0x11313, 0x11328, 'ALetter'),
    (0x1132A, 0x11330, 'ALetter'),
    (0x11332, 0x11333, 'ALetter'),
    (0x11335, 0x11339, 'ALetter'),
    (0x1133B, 0x1133C, 'Extend'),
    (0x1133D, 0x1133D, 'ALetter'),
    (0x1133E, 0x11344, 'Extend'),
    (0x11347, 0x11348, 'Extend'),
    (0x1134B, 0x1134D, 'Extend'),
    (0x11350, 0x11350, 'ALetter'),
    (0x11357, 0x11357, 'Extend'),
    (0x1135D, 0x11361, 'ALetter'),
    (0x11362, 0x11363, 'Extend'),
    (0x11366, 0x1136C, 'Extend'),
    (0x11370, 0x11374, 'Extend'),
    (0x11380, 0x11389, 'ALetter'),
    (0x1138B, 0x1138B, 'ALetter'),
    (0x1138E, 0x1138E, 'ALetter'),
    (0x11390, 0x113B5, 'ALetter'),
    (0x113B7, 0x113B7, 'ALetter'),
    (0x113B8, 0x113C0, 'Extend'),
    (0x113C2, 0x113C2, 'Extend'),
    (0x113C5, 0x113C5, 'Extend'),
    (0x113C7, 0x113CA, 'Extend'),
    (0x113CC, 0x113D0, 'Extend'),
    (0x113D1, 0x113D1, 'ALetter'),
    (0x113D2, 0x113D2, 'Extend'),
    (0x113D3, 0x113D3, 'ALetter'),
    (0x113E1, 0x113E2, 'Extend'),
    (0x11400, 0x11434, 'ALetter'),
    (0x11435, 0x11446, 'Extend'),
    (0x11447, 0x1144A, 'ALetter'),
    (0x11450, 0x11459, 'Numeric'),
    (0x1145E, 0x1145E, 'Extend'),
    (0x1145F, 0x11461, 'ALetter'),
    (0x11480, 0x114AF, 'ALetter'),
    (0x114B0, 0x114C3, 'Extend'),
    (0x114C4, 0x114C5, 'ALetter'),
    (0x114C7, 0x114C7, 'ALetter'),
    (0x114D0, 0x114D9, 'Numeric'),
    (0x11580, 0x115AE, 'ALetter'),
    (0x115AF, 0x115B5, 'Extend'),
    (0x115B8, 0x115C0, 'Extend'),
    (0x115D8, 0x115DB, 'ALetter'),
    (0x115DC, 0x115DD, 'Extend'),
    (0x11600, 0x1162F, 'ALetter'),
    (0x11630, 0x11640, 'Extend'),
    (0x11644, 0x11644, 'ALetter'),
    (0x11650, 0x11659, 'Numeric'),
    (0x11680, 0x116AA, 'ALetter'),
    (0x116AB, 0x116B7, 'Extend'),
    (0x116B8, 0x116B8, 'ALetter'),
    (0x116C0, 0x116C9, 'Numeric'),
    (0x116D0, 0x116E3, 'Numeric'),
    (0x1171D, 0x1172B, 'Extend'),
    (0x11730, 0x11739, 'Numeric'),
    (0x11800, 0x1182B, 'ALetter'),
    (0x1182C, 0x1183A, 'Extend'),
    (0x118A0, 0x118DF, 'ALetter'),
    (0x118E0, 0x118E9, 'Numeric'),
    (0x118FF, 0x11906, 'ALetter'),
    (0x11909, 0x11909, 'ALetter'),
    (0x1190C, 0x11913, 'ALetter'),
    (0x11915, 0x11916, 'ALetter'),
    (0x11918, 0x1192F, 'ALetter'),
    (0x11930, 0x11935, 'Extend'),
    (0x11937, 0x11938, 'Extend'),
    (0x1193B, 0x1193E, 'Extend'),
    (0x1193F, 0x1193F, 'ALetter'),
    (0x11940, 0x11940, 'Extend'),
    (0x11941, 0x11941, 'ALetter'),
    (0x11942, 0x11943, 'Extend'),
    (0x11950, 0x11959, 'Numeric'),
    (0x119A0, 0x119A7, 'ALetter'),
    (0x119AA, 0x119D0, 'ALetter'),
    (0x119D1, 0x119D7, 'Extend'),
    (0x119DA, 0x119E0, 'Extend'),
    (0x119E1, 0x119E1, 'ALetter'),
    (0x119E3, 0x119E3, 'ALetter'),
    (0x119E4, 0x119E4, 'Extend'),
    (0x11A00, 0x11A00, 'ALetter'),
    (0x11A01, 0x11A0A, 'Extend'),
    (0x11A0B, 0x11A32, 'ALetter'),
    (0x11A33, 0x11A39, 'Extend'),
    (0x11A3A, 0x11A3A, 'ALetter'),
    (0x11A3B, 0x11A3E, 'Extend'),
    (0x11A47, 0x11A47, 'Extend'),
    (0x11A50, 0x11A50, 'ALetter'),
    (0x11A51, 0x11A5B, 'Extend'),
    (0x11A5C, 0x11A89, 'ALetter'),
    (0x11A8A, 0x11A99, 'Extend'),
    (0x11A9D, 0x11A9D, 'ALetter'),
    (0x11AB0, 0x11AF8, 'ALetter'),
    (0x11B60, 0x11B67, 'Extend'),
    (0x11BC0, 0x11BE0, 'ALetter'),
    (0x11BF0, 0x11BF9, 'Numeric'),
    (0x11C00, 0x11C08, 'ALetter'),
    (0x11C0A, 0x11C2E, 'ALetter'),
    (0x11C2F, 0x11C36, 'Extend'),
    (0x11C38, 0x11C3F, 'Extend'),
    (0x11C40, 0x11C40, 'ALetter'),
    (0x11C50, 0x11C59, 'Numeric'),
    (0x11C72, 0x11C8F, 'ALetter'),
    (0x11C92, 0x11CA7, 'Extend'),
    (0x11CA9, 0x11CB6, 'Extend'),
    (0x11D00, 0x11D06, 'ALetter'),
    (0x11D08, 0x11D09, 'ALetter'),
    (0x11D0B, 0x11D30, 'ALetter'),
    (0x11D31, 0x11D36, 'Extend'),
    (0x11D3A, 0x11D3A, 'Extend'),
    (0x11D3C, 0x11D3D, 'Extend'),
    (0x11D3F, 0x11D45, 'Extend'),
    (0x11D46, 0x11D46, 'ALetter'),
    (0x11D47, 0x11D47, 'Extend'),
    (0x11D50, 0x11D59, 'Numeric'),
    (0x11D60, 0x11D65, 'ALetter'),
    (0x11D67, 0x11D68, 'ALetter'),
    (0x11D6A, 0x11D89, 'ALetter'),
    (0x11D8A, 0x11D8E, 'Extend'),
    (0x11D90, 0x11D91, 'Extend'),
    (0x11D93, 0x11D97, 'Extend'),
    (0x11D98, 0x11D98, 'ALetter'),
    (0x11DA0, 0x11DA9, 'Numeric'),
    (0x11DB0, 0x11DDB, 'ALetter'),
    (0x11DE0, 0x11DE9, 'Numeric'),
    (0x11EE0, 0x11EF2, 'ALetter'),
    (0x11EF3, 0x11EF6, 'Extend'),
    (0x11F00, 0x11F01, 'Extend'),
    (0x11F02, 0x11F02, 'ALetter'),
    (0x11F03, 0x11F03, 'Extend'),
    (0x11F04, 0x11F10, 'ALetter'),
    (0x11F12, 0x11F33, 'ALetter'),
    (0x11F34, 0x11F3A, 'Extend'),
    (0x11F3E, 0x11F42, 'Extend'),
    (0x11F50, 0x11F59, 'Numeric'),
    (0x11F5A, 0x11F5A, 'Extend'),
    (0x11FB0, 0x11FB0, 'ALetter'),
    (0x12000, 0x12399, 'ALetter'),
    (0x12400, 0x1246E, 'ALetter'),
    (0x12480, 0x12543, 'ALetter'),
    (0x12F90, 0x12FF0, 'ALetter'),
    (0x13000, 0x1342F, 'ALetter'),
    (0x13430, 0x1343F, 'Format'),
    (0x13440, 0x13440, 'Extend'),
    (0x13441, 0x13446, 'ALetter'),
    (0x13447, 0x13455, 'Extend'),
    (0x13460, 0x143FA, 'ALetter'),
    (0x14400, 0x14646, 'ALetter'),
    (0x16100, 0x1611D, 'ALetter'),
    (0x1611E, 0x1612F, 'Extend'),
    (0x16130, 0x16139, 'Numeric'),
    (0x16800, 0x16A38, 'ALetter'),
    (0x16A40, 0x16A5E, 'ALetter'),
    (0x16A60, 0x16A69, 'Numeric'),
    (0x16A70, 0x16ABE, 'ALetter'),
    (0x16AC0, 0x16AC9, 'Numeric'),
    (0x16AD0, 0x16AED, 'ALetter'),
    (0x16AF0, 0x16AF4, 'Extend'),
    (0x16B00, 0x16B2F, 'ALetter'),
    (0x16B30, 0x16B36, 'Extend'),
    (0x16B40, 0x16B43, 'ALetter'),
    (0x16B50, 0x16B59, 'Numeric'),
    (0x16B63, 0x16B77, 'ALetter'),
    (0x16B7D, 0x16B8F, 'ALetter'),
    (0x16D40, 0x16D6C, 'ALetter'),
    (0x16D70, 0x16D79, 'Numeric'),
    (0x16E40, 0x16E7F, 'ALetter'),
    (0x16EA0, 0x16EB8, 'ALetter'),
    (0x16EBB, 0x16ED3, 'ALetter'),
    (0x16F00, 0x16F4A, 'ALetter'),
    (0x16F4F, 0x16F4F, 'Extend'),
    (0x16F50, 0x16F50, 'ALetter'),
    (0x16F51, 0x16F87, 'Extend'),
    (0x16F8F, 0x16F92, 'Extend'),
    (0x16F93, 0x16F9F, 'ALetter'),
    (0x16FE0, 0x16FE1, 'ALetter'),
    (0x16FE3, 0x16FE3, 'ALetter'),
    (0x16FE4, 0x16FE4, 'Extend'),
    (0x16FF0, 0x16FF1, 'Extend'),
    (0x1AFF0, 0x1AFF3, 'Katakana'),
    (0x1AFF5, 0x1AFFB, 'Katakana'),
    (0x1AFFD, 0x1AFFE, 'Katakana'),
    (0x1B000, 0x1B000, 'Katakana'),
    (0x1B120, 0x1B122, 'Katakana'),
    (0x1B155, 0x1B155, 'Katakana'),
    (0x1B164, 0x1B167, 'Katakana'),
    (0x1BC00, 0x1BC6A, 'ALetter'),
    (0x1BC70, 0x1BC7C, 'ALetter'),
    (0x1BC80, 0x1BC88, 'ALetter'),
    (0x1BC90, 0x1BC99, 'ALetter'),
    (0x1BC9D, 0x1BC9E, 'Extend'),
    (0x1BCA0, 0x1BCA3, 'Format'),
    (0x1CCF0, 0x1CCF9, 'Numeric'),
    (0x1CF00, 0x1CF2D, 'Extend'),
    (0x1CF30, 0x1CF46, 'Extend'),
    (0x1D165, 0x1D169, 'Extend'),
    (0x1D16D, 0x1D172, 'Extend'),
    (0x1D173, 0x1D17A, 'Format'),
    (0x1D17B, 0x1D182, 'Extend'),
    (0x1D185, 0x1D18B, 'Extend'),
    (0x1D1AA, 0x1D1AD, 'Extend'),
    (0x1D242, 0x1D244, 'Extend'),
    (0x1D400, 0x1D454, 'ALetter'),
    (0x1D456, 0x1D49C, 'ALetter'),
    (0x1D49E, 0x1D49F, 'ALetter'),
    (0x1D4A2, 0x1D4A2, 'ALetter'),
    (0x1D4A5, 0x1D4A6, 'ALetter'),
    (0x1D4A9, 0x1D4AC, 'ALetter'),
    (0x1D4AE, 0x1D4B9, 'ALetter'),
    (0x1D4BB, 0x1D4BB, 'ALetter'),
    (0x1D4BD, 0x1D4C3, 'ALetter'),
    (0x1D4C5, 0x1D505, 'ALetter'),
    (0x1D507, 0x1D50A, 'ALetter'),
    (0x1D50D, 0x1D514, 'ALetter'),
    (0x1D516, 0x1D51C, 'ALetter'),
    (0x1D51E, 0x1D539, 'ALetter'),
    (0x1D53B, 0x1D53E, 'ALetter'),
    (0x1D540, 0x1D544, 'ALetter'),
    (0x1D546, 0x1D546, 'ALetter'),
    (0x1D54A, 0x1D550, 'ALetter'),
    (0x1D552, 0x1D6A5, 'ALetter'),
    (0x1D6A8, 0x1D6C0, 'ALetter'),
    (0x1D6C2, 0x1D6DA, 'ALetter'),
    (0x1D6DC, 0x1D6FA, 'ALetter'),
    (0x1D6FC, 0x1D714, 'ALetter'),
    (0x1D716, 0x1D734, 'ALetter'),
    (0x1D736, 0x1D74E, 'ALetter'),
    (0x1D750, 0x1D76E, 'ALetter'),
    (0x1D770, 0x1D788, 'ALetter'),
    (0x1D78A, 0x1D7A8, 'ALetter'),
    (0x1D7AA, 0x1D7C2, 'ALetter'),
    (0x1D7C4, 0x1D7CB, 'ALetter'),
    (0x1D7CE, 0x1D7FF, 'Numeric'),
    (0x1DA00, 0x1DA36, 'Extend'),
    (0x1DA3B, 0x1DA6C, 'Extend'),
    (0x1DA75, 0x1DA75, 'Extend'),
    (0x1DA84, 0x1DA84, 'Extend'),
    (0x1DA9B, 0x1DA9F, 'Extend'),
    (0x1DAA1, 0x1DAAF, 'Extend'),
    (0x1DF00, 0x1DF1E, 'ALetter'),
    (0x1DF25, 0x1DF2A, 'ALetter'),
    (0x1E000, 0x1E006, 'Extend'),
    (0x1E008, 0x1E018, 'Extend'),
    (0x1E01B, 0x1E021, 'Extend'),
    (0x1E023, 0x1E024, 'Extend'),
    (0x1E026, 0x1E02A, 'Extend'),
    (0x1E030, 0x1E06D, 'ALetter'),
    (0x1E08F, 0x1E08F, 'Extend'),
    (0x1E100, 0x1E12C, 'ALetter'),
    (0x1E130, 0x1E136, 'Extend'),
    (0x1E137, 0x1E13D, 'ALetter'),
    (0x1E140, 0x1E149, 'Numeric'),
    (0x1E14E, 0x1E14E, 'ALetter'),
    (0x1E290, 0x1E2AD, 'ALetter'),
    (0x1E2AE, 0x1E2AE, 'Extend'),
    (0x1E2C0, 0x1E2EB, 'ALetter'),
    (0x1E2EC, 0x1E2EF, 'Extend'),
    (0x1E2F0, 0x1E2F9, 'Numeric'),
    (0x1E4D0, 0x1E4EB, 'ALetter'),
    (0x1E4EC, 0x1E4EF, 'Extend'),
    (0x1E4F0, 0x1E4F9, 'Numeric'),
    (0x1E5D0, 0x1E5ED, 'ALetter'),
    (0x1E5EE, 0x1E5EF, 'Extend'),
    (0x1E5F0, 0x1E5F0, 'ALetter'),
    (0x1E5F1, 0x1E5FA, 'Numeric'),
    (0x1E6C0, 0x1E6DE, 'ALetter'),
    (0x1E6E0, 0x1E6E2, 'ALetter'),
    (0x1E6E3, 0x1E6E3, 'Extend'),
    (0x1E6E4, 0x1E6E5, 'ALetter'),
    (0x1E6E6, 0x1E6E6, 'Extend'),
    (0x1E6E7, 0x1E6ED, 'ALetter'),
    (0x1E6EE, 0x1E6EF, 'Extend'),
    (0x1E6F0, 0x1E6F4, 'ALetter'),
    (0x1E6F5, 0x1E6F5, 'Extend'),
    (0x1E6FE, 0x1E6FF, 'ALetter'),
    (0x1E7E0, 0x1E7E6, 'ALetter'),
    (0x1E7E8, 0x1E7EB, 'ALetter'),
    (0x1E7ED, 0x1E7EE, 'ALetter'),
    (0x1E7F0, 0x1E7FE, 'ALetter'),
    (0x1E800, 0x1E8C4, 'ALetter'),
    (0x1E8D0, 0x1E8D6, 'Extend'),
    (0x1E900, 0x1E943, 'ALetter'),
    (0x1E944, 0x1E94A, 'Extend'),
    (0x1E94B, 0x1E94B, 'ALetter'),
    (0x1E950, 0x1E959, 'Numeric'),
    (0x1EE00, 0x1EE03, 'ALetter'),
    (0x1EE05, 0x1EE1F, 'ALetter'),
    (0x1EE21, 0x1EE22, 'ALetter'),
    (0x1EE24, 0x1EE24, 'ALetter'),
    (0x1EE27, 0x1EE27, 'ALetter'),
    (0x1EE29, 0x1EE32, 'ALetter'),
    (0x1EE34, 0x1EE37, 'ALetter'),
    (0x1EE39, 0x1EE39, 'ALetter'),
    (0x1EE3B, 0x1EE3B, 'ALetter'),
    (0x1EE42, 0x1EE42, 'ALetter'),
    (0x1EE47, 0x1EE47, 'ALetter'),
    (0x1EE49, 0x1EE49, 'ALetter'),
    (0x1EE4B, 0x1EE4B, 'ALetter'),
    (0x1EE4D, 0x1EE4F, 'ALetter'),
    (0x1EE51, 0x1EE52, 'ALetter'),
    (0x1EE54, 0x1EE54, 'ALetter'),
    (0x1EE57, 0x1EE57, 'ALetter'),
    (0x1EE59, 0x1EE59, 'ALetter'),
    (0x1EE5B, 0x1EE5B, 'ALetter'),
    (0x1EE5D, 0x1EE5D, 'ALetter'),
    (0x1EE5F, 0x1EE5F, 'ALetter'),
    (0x1EE61, 0x1EE62, 'ALetter'),
    (0x1EE64, 0x1EE64, 'ALetter'),
    (0x1EE67, 0x1EE6A, 'ALetter'),
    (0x1EE6C, 0x1EE72, 'ALetter'),
    (0x1EE74, 0x1EE77, 'ALetter'),
    (0x1EE79, 0x1EE7C, 'ALetter'),
    (0x1EE7E, 0x1EE7E, 'ALetter'),
    (0x1EE80, 0x1EE89, 'ALetter'),
    (0x1EE8B, 0x1EE9B, 'ALetter'),
    (0x1EEA1, 0x1EEA3, 'ALetter'),
    (0x1EEA5, 0x1EEA9, 'ALetter'),
    (0x1EEAB, 0x1EEBB, 'ALetter'),
    (0x1F130, 0x1F149, 'ALetter'),
    (0x1F150, 0x1F169, 'ALetter'),
    (0x1F170, 0x1F189, 'ALetter'),
    (0x1F1E6, 0x1F1FF, 'Regional_Indicator'),
    (0x1F3FB, 0x1F3FF, 'Extend'),
    (0x1FBF0, 0x1FBF9, 'Numeric'),
    (0xE0001, 0xE0001, 'Format'),
    (0xE0020, 0xE007F, 'Extend'),
    (0xE0100, 0xE01EF, 'Extend'),
)

EXTENDED_PICTOGRAPHIC_RANGES = (
    (0x000A9, 0x000A9),
    (0x000AE, 0x000AE),
    (0x0203C, 0x0203C),
    (0x02049, 0x02049),
    (0x02122, 0x02122),
    (0x02139, 0x02139),
    (0x02194, 0x02199),
    (0x021A9, 0x021AA),
    (0x0231A, 0x0231B),
    (0x02328, 0x02328),
    (0x023CF, 0x023CF),
    (0x023E9, 0x023F3),
    (0x023F8, 0x023FA),
    (0x024C2, 0x024C2),
    (0x025AA, 0x025AB),
    (0x025B6, 0x025B6),
    (0x025C0, 0x025C0),
    (0x025FB, 0x025FE),
    (0x02600, 0x02604),
    (0x0260E, 0x0260E),
    (0x02611, 0x02611),
    (0x02614, 0x02615),
    (0x02618, 0x02618),
    (0x0261D, 0x0261D),
    (0x02620, 0x02620),
    (0x02622, 0x02623),
    (0x02626, 0x02626),
    (0x0262A, 0x0262A),
    (0x0262E, 0x0262F),
    (0x02638, 0x0263A),
    (0x02640, 0x02640),
    (0x02642, 0x02642),
    (0x02648, 0x02653),
    (0x0265F, 0x02660),
    (0x02663, 0x02663),
    (0x02665, 0x02666),
    (0x02668, 0x02668),
    (0x0267B, 0x0267B),
    (0x0267E, 0x0267F),
    (0x02692, 0x02697),
    (0x02699, 0x02699),
    (0x0269B, 0x0269C),
    (0x026A0, 0x026A1),
    (0x026A7, 0x026A7),
    (0x026AA, 0x026AB),
    (0x026B0, 0x026B1),
    (0x026BD, 0x026BE),
    (0x026C4, 0x026C5),
    (0x026C8, 0x026C8),
    (0x026CE, 0x026CF),
    (0x026D1, 0x026D1),
    (0x026D3, 0x026D4),
    (0x026E9, 0x026EA),
    (0x026F0, 0x026F5),
    (0x026F7, 0x026FA),
    (0x026FD, 0x026FD),
    (0x02702, 0x02702),
    (0x02705, 0x02705),
    (0x02708, 0x0270D),
    (0x0270F, 0x0270F),
    (0x02712, 0x02712),
    (0x02714, 0x02714),
    (0x02716, 0x02716),
    (0x0271D, 0x0271D),
    (0x02721, 0x02721),
    (0x02728, 0x02728),
    (0x02733, 0x02734),
    (0x02744, 0x02744),
    (0x02747, 0x02747),
    (0x0274C, 0x0274C),
    (0x0274E, 0x0274E),
    (0x02753, 0x02755),
    (0x02757, 0x02757),
    (0x02763, 0x02764),
    (0x02795, 0x02797),
    (0x027A1, 0x027A1),
    (0x027B0, 0x027B0),
    (0x027BF, 0x027BF),
    (0x02934, 0x02935),
    (0x02B05, 0x02B07),
    (0x02B1B, 0x02B1C),
    (0x02B50, 0x02B50),
    (0x02B55, 0x02B55),
    (0x03030, 0x03030),
    (0x0303D, 0x0303D),
    (0x03297, 0x03297),
    (0x03299, 0x03299),
    (0x1F004, 0x1F004),
    (0x1F02C, 0x1F02F),
    (0x1F094, 0x1F09F),
    (0x1F0AF, 0x1F0B0),
    (0x1F0C0, 0x1F0C0),
    (0x1F0CF, 0x1F0D0),
    (0x1F0F6, 0x1F0FF),
    (0x1F170, 0x1F171),
    (0x1F17E, 0x1F17F),
    (0x1F18E, 0x1F18E),
    (0x1F191, 0x1F19A),
    (0x1F1AE, 0x1F1E5),
    (0x1F201, 0x1F20F),
    (0x1F21A, 0x1F21A),
    (0x1F22F, 0x1F22F),
    (0x1F232, 0x1F23A),
    (0x1F23C, 0x1F23F),
    (0x1F249, 0x1F25F),
    (0x1F266, 0x1F321),
    (0x1F324, 0x1F393),
    (0x1F396, 0x1F397),
    (0x1F399, 0x1F39B),
    (0x1F39E, 0x1F3F0),
    (0x1F3F3, 0x1F3F5),
    (0x1F3F7, 0x1F3FA),
    (0x1F400, 0x1F4FD),
    (0x1F4FF, 0x1F53D),
    (0x1F549, 0x1F54E),
    (0x1F550, 0x1F567),
    (0x1F56F, 0x1F570),
    (0x1F573, 0x1F57A),
    (0x1F587, 0x1F587),
    (0x1F58A, 0x1F58D),
    (0x1F590, 0x1F590),
    (0x1F595, 0x1F596),
    (0x1F5A4, 0x1F5A5),
    (0x1F5A8, 0x1F5A8),
    (0x1F5B1, 0x1F5B2),
    (0x1F5BC, 0x1F5BC),
    (0x1F5C2, 0x1F5C4),
    (0x1F5D1, 0x1F5D3),
    (0x1F5DC, 0x1F5DE),
    (0x1F5E1, 0x1F5E1),
    (0x1F5E3, 0x1F5E3),
    (0x1F5E8, 0x1F5E8),
    (0x1F5EF, 0x1F5EF),
    (0x1F5F3, 0x1F5F3),
    (0x1F5FA, 0x1F64F),
    (0x1F680, 0x1F6C5),
    (0x1F6CB, 0x1F6D2),
    (0x1F6D5, 0x1F6E5),
    (0x1F6E9, 0x1F6E9),
    (0x1F6EB, 0x1F6F0),
    (0x1F6F3, 0x1F6FF),
    (0x1F7DA, 0x1F7FF),
    (0x1F80C, 0x1F80F),
    (0x1F848, 0x1F84F),
    (0x1F85A, 0x1F85F),
    (0x1F888, 0x1F88F),
    (0x1F8AE, 0x1F8AF),
    (0x1F8BC, 0x1F8BF),
    (0x1F8C2, 0x1F8CF),
    (0x1F8D9, 0x1F8FF),
    (0x1F90C, 0x1F93A),
    (0x1F93C, 0x1F945),
    (0x1F947, 0x1F9FF),
    (0x1FA58, 0x1FA5F),
    (0x1FA6E, 0x1FAFF),
    (0x1FC00, 0x1FFFD),
)
