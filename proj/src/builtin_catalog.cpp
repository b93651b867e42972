#include "cliffgraph/catalog.hpp"

namespace cliff {

// Kept in sync with data/catalog.jsonl (asserted by a unit test).
const std::string& builtin_catalog_text() {
    static const std::string text = R"CATALOG(
{"name":"C1","degree":1,"generators":[]}
{"name":"C2","degree":2,"generators":["(1 2)"]}
{"name":"C3","degree":3,"generators":["(1 2 3)"]}
{"name":"C4","degree":4,"generators":["(1 2 3 4)"]}
{"name":"C2xC2","degree":4,"generators":["(1 2)","(3 4)"]}
{"name":"C5","degree":5,"generators":["(1 2 3 4 5)"]}
{"name":"C6","degree":5,"generators":["(1 2 3)(4 5)"]}
{"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}
{"name":"C7","degree":7,"generators":["(1 2 3 4 5 6 7)"]}
{"name":"C8","degree":8,"generators":["(1 2 3 4 5 6 7 8)"]}
{"name":"C4xC2","degree":6,"generators":["(1 2 3 4)","(5 6)"]}
{"name":"C2xC2xC2","degree":6,"generators":["(1 2)","(3 4)","(5 6)"]}
{"name":"D8","degree":4,"generators":["(1 2 3 4)","(1 3)"]}
{"name":"Q8","degree":8,"generators":["(1 2 3 4)(5 6 7 8)","(1 5 3 7)(2 8 4 6)"]}
{"name":"C9","degree":9,"generators":["(1 2 3 4 5 6 7 8 9)"]}
{"name":"C3xC3","degree":6,"generators":["(1 2 3)","(4 5 6)"]}
{"name":"C10","degree":7,"generators":["(1 2 3 4 5)(6 7)"]}
{"name":"D10","degree":5,"generators":["(1 2 3 4 5)","(2 5)(3 4)"]}
{"name":"C11","degree":11,"generators":["(1 2 3 4 5 6 7 8 9 10 11)"]}
{"name":"C12","degree":7,"generators":["(1 2 3 4)(5 6 7)"]}
{"name":"C6xC2","degree":7,"generators":["(1 2 3)(4 5)","(6 7)"]}
{"name":"D12","degree":6,"generators":["(1 2 3 4 5 6)","(2 6)(3 5)"]}
{"name":"A4","degree":4,"generators":["(1 2)(3 4)","(1 2 3)"]}
{"name":"Dic3","degree":7,"generators":["(1 2 3)","(2 3)(4 5 6 7)"]}
{"name":"C13","degree":13,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12 13)"]}
{"name":"C14","degree":9,"generators":["(1 2 3 4 5 6 7)(8 9)"]}
{"name":"D14","degree":7,"generators":["(1 2 3 4 5 6 7)","(2 7)(3 6)(4 5)"]}
{"name":"C15","degree":8,"generators":["(1 2 3)(4 5 6 7 8)"]}
{"name":"C16","degree":16,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16)"]}
{"name":"C8xC2","degree":10,"generators":["(1 2 3 4 5 6 7 8)","(9 10)"]}
{"name":"C4xC4","degree":8,"generators":["(1 2 3 4)","(5 6 7 8)"]}
{"name":"C4xC2xC2","degree":8,"generators":["(1 2 3 4)","(5 6)","(7 8)"]}
{"name":"C2xC2xC2xC2","degree":8,"generators":["(1 2)","(3 4)","(5 6)","(7 8)"]}
{"name":"D16","degree":8,"generators":["(1 2 3 4 5 6 7 8)","(2 8)(3 7)(4 6)"]}
{"name":"SD16","degree":8,"generators":["(1 2 3 4 5 6 7 8)","(2 4)(3 7)(6 8)"]}
{"name":"Q16","degree":16,"generators":["(1 2 3 4 5 6 7 8)(9 10 11 12 13 14 15 16)","(1 9 5 13)(2 16 6 12)(3 15 7 11)(4 14 8 10)"]}
{"name":"M16","degree":8,"generators":["(1 2 3 4 5 6 7 8)","(2 6)(4 8)"]}
{"name":"C4:C4","degree":8,"generators":["(1 2 3 4)","(2 4)(5 6 7 8)"]}
{"name":"C2xC2:C4","degree":8,"generators":["(1 2)","(3 4)","(1 3)(2 4)(5 6 7 8)"]}
{"name":"D8xC2","degree":6,"generators":["(1 2 3 4)","(1 3)","(5 6)"]}
{"name":"Q8xC2","degree":10,"generators":["(1 2 3 4)(5 6 7 8)","(1 5 3 7)(2 8 4 6)","(9 10)"]}
{"name":"D8oC4","degree":8,"generators":["(1 2 3 4)(5 6 7 8)","(1 5 3 7)(2 8 4 6)","(1 2 3 4)(5 8 7 6)"]}
{"name":"C17","degree":17,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17)"]}
{"name":"C18","degree":11,"generators":["(1 2)(3 4 5 6 7 8 9 10 11)"]}
{"name":"C6xC3","degree":8,"generators":["(1 2 3)(4 5)","(6 7 8)"]}
{"name":"D18","degree":9,"generators":["(1 2 3 4 5 6 7 8 9)","(2 9)(3 8)(4 7)(5 6)"]}
{"name":"S3xC3","degree":6,"generators":["(1 2)","(1 2 3)","(4 5 6)"]}
{"name":"C3xC3:C2","degree":6,"generators":["(1 2 3)","(4 5 6)","(2 3)(5 6)"]}
{"name":"C19","degree":19,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19)"]}
{"name":"C20","degree":9,"generators":["(1 2 3 4)(5 6 7 8 9)"]}
{"name":"C10xC2","degree":9,"generators":["(1 2 3 4 5)(6 7)","(8 9)"]}
{"name":"D20","degree":10,"generators":["(1 2 3 4 5 6 7 8 9 10)","(2 10)(3 9)(4 8)(5 7)"]}
{"name":"Dic5","degree":9,"generators":["(1 2 3 4 5)","(2 5)(3 4)(6 7 8 9)"]}
{"name":"F20","degree":5,"generators":["(1 2 3 4 5)","(2 3 5 4)"]}
{"name":"C21","degree":10,"generators":["(1 2 3)(4 5 6 7 8 9 10)"]}
{"name":"C7:C3","degree":7,"generators":["(1 2 3 4 5 6 7)","(2 3 5)(4 7 6)"]}
{"name":"C22","degree":13,"generators":["(1 2)(3 4 5 6 7 8 9 10 11 12 13)"]}
{"name":"D22","degree":11,"generators":["(1 2 3 4 5 6 7 8 9 10 11)","(2 11)(3 10)(4 9)(5 8)(6 7)"]}
{"name":"C23","degree":23,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23)"]}
{"name":"C24","degree":11,"generators":["(1 2 3 4 5 6 7 8)(9 10 11)"]}
{"name":"C12xC2","degree":9,"generators":["(1 2 3 4)(5 6 7)","(8 9)"]}
{"name":"C6xC2xC2","degree":9,"generators":["(1 2 3)(4 5)","(6 7)","(8 9)"]}
{"name":"C3:C8","degree":11,"generators":["(1 2 3)","(2 3)(4 5 6 7 8 9 10 11)"]}
{"name":"SL23","degree":8,"generators":["(1 6 2 3)(4 7 8 5)","(1 4 7)(2 8 5)"]}
{"name":"Dic6","degree":11,"generators":["(1 2 3)","(4 5 6 7)(8 9 10 11)","(2 3)(4 8 6 10)(5 11 7 9)"]}
{"name":"S3xC4","degree":7,"generators":["(1 2)","(1 2 3)","(4 5 6 7)"]}
{"name":"D24","degree":12,"generators":["(1 2 3 4 5 6 7 8 9 10 11 12)","(2 12)(3 11)(4 10)(5 9)(6 8)"]}
{"name":"Dic3xC2","degree":9,"generators":["(3 4 5)","(4 5)(6 7 8 9)","(1 2)"]}
{"name":"C6xC2:C2","degree":7,"generators":["(1 2 3)","(2 3)(4 5 6 7)","(4 6)"]}
{"name":"D8xC3","degree":7,"generators":["(1 2 3 4)","(1 3)","(5 6 7)"]}
{"name":"Q8xC3","degree":11,"generators":["(1 2 3 4)(5 6 7 8)","(1 5 3 7)(2 8 4 6)","(9 10 11)"]}
{"name":"S4","degree":4,"generators":["(1 2)","(1 2 3 4)"]}
{"name":"A4xC2","degree":6,"generators":["(3 4)(5 6)","(3 4 5)","(1 2)"]}
{"name":"S3xC2xC2","degree":7,"generators":["(1 2)","(1 2 3)","(4 5)","(6 7)"]}
{"name":"GL23","degree":8,"generators":["(1 4 7)(2 8 5)","(1 3)(2 6)(5 7)"],"tags":["example"]}
)CATALOG";
    return text;
}

}  // namespace cliff
