#include "hatom/golden.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace hatom::golden {

const std::array<AngularRow, 10>& table3() {
    static const std::array<AngularRow, 10> rows = {{
        {0, "2.531024246969", "2.531024246969", "2.531024246969",
         "4.380562660576", "0.4968337130111", "0.0795774715459"},
        {1, "2.0990786249678", "2.207799279060", "1.856060888495",
         "3.546081906570", "0.4877871787573", "0.1432394487826"},
        {2, "2.0411250061339", "2.1880740866193", "1.586098811200",
         "3.498565470109", "0.4790443043946", "0.17052315331268"},
        {3, "2.0206596227683", "2.1838712989476", "1.4135979721010",
         "3.488489128929", "0.4704107193889", "0.18775831398309"},
        {4, "2.0105368074094", "2.1825847862425", "1.2861478982321",
         "3.485418316773", "0.4618199815337", "0.20037698056464"},
        {5, "2.0045776990712", "2.1821358741265", "1.1848960592462",
         "3.484336298921", "0.4532499193936", "0.21034302374067"},
        {6, "2.0006768495387", "2.1819848295620", "1.1008390899096",
         "3.483972643154", "0.4446913166609", "0.21858446105644"},
        {7, "1.997934606130", "2.1819528334935", "1.028955122477",
         "3.483896265386", "0.4361397020166", "0.22561345675926"},
        {8, "1.9959057777584", "2.1819710153868", "0.96615017473812",
         "3.483938671551", "0.4275926546791", "0.23174282746972"},
        {9, "1.9943460712042", "2.1820101260317", "0.91038050803346",
         "3.484031759027", "0.4190487531790", "0.23717779214936"},
    }};
    return rows;
}

const std::array<const char*, 10>& table3_S_refs() {
    static const std::array<const char*, 10> refs = {
        "2.5310242469692", "2.0990786249678", "2.0411250061339",
        "2.0206596227683", "2.0105368074095", "2.0045776990714",
        "2.0006768495387", "1.9979346061302", "1.9959057777583",
        "1.9943460712038",
    };
    return refs;
}

const std::array<FhaRow, 20>& table4() {
    static const std::array<FhaRow, 20> rows = {{
        {"1s", 1, 0, "2.4448978171250", "-1.29370300309"},
        {"2s", 2, 0, "6.0819732", "-4.8664081148"},
        {"2p", 2, 1, "5.7179773964224", "-2.8297112656580"},
        {"3s", 3, 0, "8.2848709", "-6.809107089"},
        {"3p", 3, 1, "8.1262512", "-5.3065985061863"},
        {"3d", 3, 2, "7.7379345080228", "-3.8973824203957"},
        {"4s", 4, 0, "9.8747416", "-8.1489547505"},
        {"4p", 4, 1, "9.7849766", "-6.8261191707376"},
        {"4d", 4, 2, "9.5879299", "-5.8530683362380"},
        {"4f", 4, 3, "9.2078601178873", "-4.7097820569485"},
        {"10s", 10, 0, "15.050243", "-12.32498491"},
        {"10p", 10, 1, "15.035316", "-11.195758752"},
        {"10d", 10, 2, "15.005147", "-10.57157435657"},
        {"10f", 10, 3, "14.958899", "-10.10288080007"},
        {"10g", 10, 4, "14.894965", "-9.700944996180"},
        {"10h", 10, 5, "14.810529", "-9.32574529"},
        {"10i", 10, 6, "14.700625", "-8.95119472938"},
        {"10k", 10, 7, "14.555826", "-8.55253099"},
        {"10l", 10, 8, "14.355085", "-8.0952748"},
        {"10m", 10, 9, "14.031044068431", "-7.521354"},
    }};
    return rows;
}

const std::array<FhaRow, 20>& table5() {
    static const std::array<FhaRow, 20> rows = {{
        {"1s", 1, 0, "4.14755992475", "-6.1476195330"},
        {"2s", 2, 0, "25.9765245", "-8430.486351"},
        {"2p", 2, 1, "22.11809373949", "-142.99143553"},
        {"3s", 3, 0, "66.2336586", "-4.104731e5"},
        {"3p", 3, 1, "62.0081804", "-20333.5038833"},
        {"3d", 3, 2, "52.72769426026", "-1213.4292120388"},
        {"4s", 4, 0, "127.32504795", "-5.984972e6"},
        {"4p", 4, 1, "122.74685003", "-4.246794e5"},
        {"4d", 4, 2, "113.56339555", "-6.0656449e4"},
        {"4f", 4, 3, "96.92810090882", "-6163.10389494375"},
        {"10s", 10, 0, "1026.566912", "-2.53697e10"},
        {"10p", 10, 1, "1020.508405", "-2.65144e9"},
        {"10d", 10, 2, "1008.283591", "-7.57534e8"},
        {"10f", 10, 3, "989.659422", "-2.98007e8"},
        {"10g", 10, 4, "964.605525", "-1.33389e8"},
        {"10h", 10, 5, "932.546877", "-6.29880e7"},
        {"10i", 10, 6, "893.652698", "-2.97745e7"},
        {"10k", 10, 7, "841.846208", "-1.34213e7"},
        {"10l", 10, 8, "776.747706", "-5.37571e7"},
        {"10m", 10, 9, "682.0134947207", "-1.70583e6"},
    }};
    return rows;
}

const std::array<FhaRow, 20>& table6() {
    static const std::array<FhaRow, 20> rows = {{
        {"1s", 1, 0, "1.6137056388801", "-0.1091619058"},
        {"2s", 2, 0, "5.579905117", "-3.288603"},
        {"2p", 2, 1, "5.1658184934843", "-2.056657825"},
        {"3s", 3, 0, "7.895456983", "-4.71928"},
        {"3p", 3, 1, "7.706768439", "-3.988042"},
        {"3d", 3, 2, "7.3045091959407", "-3.273842250"},
        {"4s", 4, 0, "9.543883432", "-5.67677"},
        {"4p", 4, 1, "9.434788623", "-5.162422"},
        {"4d", 4, 2, "9.220979188", "-4.635591"},
        {"4f", 4, 3, "8.8401955766914", "-4.169046134"},
        {"10s", 10, 0, "14.83421801", "-8.5831"},
        {"10p", 10, 1, "14.81546079", "-8.40306"},
        {"10d", 10, 2, "14.779519706", "-8.22058"},
        {"10f", 10, 3, "14.726933588", "-8.03408"},
        {"10g", 10, 4, "14.657200818", "-7.84526"},
        {"10h", 10, 5, "14.568453746", "-7.65744"},
        {"10i", 10, 6, "14.456574316", "-7.47587"},
        {"10k", 10, 7, "14.312835432", "-7.30982"},
        {"10l", 10, 8, "14.116240399", "-7.1796"},
        {"10m", 10, 9, "13.794498337697", "-7.1533"},
    }};
    return rows;
}

const std::array<FhaRow, 20>& table7() {
    static const std::array<FhaRow, 20> rows = {{
        {"1s", 1, 0, "0.5", "2.626056561016"},
        {"2s", 2, 0, "0.009765625", "96.1295856275048"},
        {"2p", 2, 1, "0.001398822737580", "13.793428401297597"},
        {"3s", 3, 0, "0.000964506172839", "599.4570931556239"},
        {"3p", 3, 1, "0.000884130658436", "160.07008401467374"},
        {"3d", 3, 2, "0.001012731481481", "41.63970776113258"},
        {"4s", 4, 0, "0.000185489654541", "2072.833978828845"},
        {"4p", 4, 1, "0.000166416168212", "676.412752272371"},
        {"4d", 4, 2, "0.000170230865478", "277.6680799158443"},
        {"4f", 4, 3, "0.000204563140869", "95.71851114591887"},
        {"10s", 10, 0, "0.000000943317", "93503.5290"},
        {"10p", 10, 1, "0.000000841581", "39072.5385"},
        {"10d", 10, 2, "0.000000801822", "23397.786166"},
        {"10f", 10, 3, "0.000000785289", "15697.1858628"},
        {"10g", 10, 4, "0.000000784339", "11036.824894"},
        {"10h", 10, 5, "0.000000797955", "7885.727210"},
        {"10i", 10, 6, "0.000000829206", "5609.7326559"},
        {"10k", 10, 7, "0.000000887467", "3899.8392585"},
        {"10l", 10, 8, "0.000000999887", "2595.614180"},
        {"10m", 10, 9, "0.000001285853", "1659.760152"},
    }};
    return rows;
}

const std::array<FhaRow, 10>& table6_refs_low() {
    static const std::array<FhaRow, 10> rows = {{
        {"1s", 1, 0, "1.6137056388", "-0.1091619058"},
        {"2s", 2, 0, "5.5799051176", "-3.2886034474"},
        {"2p", 2, 1, "5.1658184934", "-2.0566578254"},
        {"3s", 3, 0, "7.8954569837", "-4.7192844860"},
        {"3p", 3, 1, "7.7067684395", "-3.9880420674"},
        {"3d", 3, 2, "7.3045091959", "-3.2738422502"},
        {"4s", 4, 0, "9.5438834322", "-5.6767751478"},
        {"4p", 4, 1, "9.4347886234", "-5.1624221872"},
        {"4d", 4, 2, "9.2209791882", "-4.6355912037"},
        {"4f", 4, 3, "8.8401955766", "-4.1690461340"},
    }};
    return rows;
}

const std::array<FhaRow, 10>& table6_refs_n10() {
    static const std::array<FhaRow, 10> rows = {{
        {"10s", 10, 0, "14.834218018", "-8.583082598"},
        {"10p", 10, 1, "14.815460797", "-8.403065247"},
        {"10d", 10, 2, "14.779519706", "-8.220588961"},
        {"10f", 10, 3, "14.726933588", "-8.034081080"},
        {"10g", 10, 4, "14.657200818", "-7.845266303"},
        {"10h", 10, 5, "14.568453746", "-7.657443887"},
        {"10i", 10, 6, "14.456574316", "-7.475870737"},
        {"10k", 10, 7, "14.312835432", "-7.309826844"},
        {"10l", 10, 8, "14.116240399", "-7.179685623"},
        {"10m", 10, 9, "13.794498337", "-7.153386777"},
    }};
    return rows;
}

const char* table6_1s_S_rho() { return "4.14472988585"; }
const char* table6_1s_S_pi() { return "2.42186234117"; }

const std::vector<ChaRow>& table8_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-6.0449530234201", "12.2544945", "6.2095414"},
        {"0.2", "-3.9740686542021", "10.1826733", "6.20860464"},
        {"0.3", "-2.7665379461615", "8.97420833", "6.20767038"},
        {"0.5", "-1.2527639276520", "7.4585759", "6.20581197"},
        {"0.6", "-0.7156642633591", "6.9205535", "6.2048892"},
        {"0.8", "0.1265545289041", "6.0765062", "6.2030607"},
        {"1.0", "0.7735958787514", "5.4276644", "6.20126027"},
        {"1.5", "1.9263580259098", "4.27057585", "6.19693387"},
        {"2.5", "3.2916372871390", "2.89792262", "6.18955990"},
        {"3.0", "3.7310884276653", "2.45579844", "6.1868868"},
        {"4.0", "4.3257559261586", "1.85876674", "6.1845226"},
        {"5.0", "4.6620663954973", "1.5246585", "6.1867248"},
        {"7.5", "4.9391522549392", "1.2635057", "6.20265795"},
        {"10.0", "4.9726811434694", "1.23872097", "6.21140211"},
        {"20.0", "4.9759220330329", "1.23732124", "6.21324327"},
        {"40.0", "4.9759220625078", "1.23732124", "6.21324330"},
    };
    return rows;
}

const std::vector<ChaRow>& table8_2s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-6.0652785667052", "14.2461812", "8.18090263"},
        {"0.2", "-3.9857010841026", "12.1605425", "8.17484143"},
        {"0.3", "-2.7690858567973", "10.9370670", "8.16798114"},
        {"0.5", "-1.2359050275123", "9.3875148", "8.15160977"},
        {"0.6", "-0.6884504327452", "8.83042433", "8.1419738"},
        {"0.8", "0.1758653404988", "7.9436427", "8.1195080"},
        {"1.0", "0.8469685980263", "7.2454746", "8.0924431"},
        {"3.0", "4.1824208766826", "3.3944866", "7.5769074"},
        {"5.0", "5.7661541562104", "1.2155313", "6.9816854"},
        {"7.5", "6.9655961664353", "-0.3916768", "6.5739193"},
        {"10.0", "7.7053107207956", "-1.2984101", "6.4069006"},
        {"12.0", "8.0874246952222", "-1.7443702", "6.3430544"},
        {"15.0", "8.4139254912730", "-2.1168056", "6.2971198"},
        {"20.0", "8.5857873091459", "-2.3081634", "6.27762390"},
        {"30.0", "8.6127521696429", "-2.33524516", "6.27750700"},
        {"40.0", "8.6129969633475", "-2.33538378", "6.27761318"},
    };
    return rows;
}

const std::vector<ChaRow>& table9_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-2.2772467171115", "0.499999999988", "-1.138623358529"},
        {"0.2", "-1.9899960082576", "0.499999999284", "-0.994998002705"},
        {"0.5", "-0.9853488252731", "0.499999833837", "-0.492674248908"},
        {"0.8", "0.1298124908784", "0.499997363767", "0.064905903223"},
        {"1.0", "0.9066489220414", "0.499990349260", "0.453315711188"},
        {"1.5", "2.9023494698347", "0.499902367380", "1.450891370935"},
        {"2.5", "6.8273006148635", "0.498479920188", "3.403272265597"},
        {"5.0", "13.6370406555684", "0.476304362681", "6.495381958317"},
        {"10.0", "15.7718785921688", "0.458021139475", "7.223853804451"},
        {"20.0", "15.7955808066365", "0.457903457550", "7.232851065381"},
        {"40.0", "15.7955810228201", "0.457903457462", "7.232851162970"},
    };
    return rows;
}

const std::vector<ChaRow>& table9_2s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-2.27905040787", "0.4999999999997", "-1.139525203938"},
        {"0.2", "-1.99236352845", "0.4999999999863", "-0.996181764197"},
        {"0.5", "-0.97510014910", "0.4999999964918", "-0.487550071130"},
        {"0.8", "0.18219873857", "0.4999999370189", "0.091099357813"},
        {"1.0", "1.00811263141", "0.4999997455334", "0.504056059175"},
        {"3.0", "10.81989915020", "0.4994369378358", "5.403857299273"},
        {"5.0", "22.59710251821", "0.4560283384851", "10.30491911595"},
        {"7.5", "38.04973331016", "-0.59440039327", "-22.61677644352"},
        {"15.0", "69.87499964359", "-33.9829209887", "-2374.556591979"},
        {"30.0", "75.86611269904", "-52.8750365859", "-4011.423484596"},
        {"40.0", "75.87378643375", "-52.8898370490", "-4012.952200777"},
    };
    return rows;
}

const std::vector<ChaRow>& table10_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-6.2445033842373", "12.8535", "6.6089"},
        {"0.2", "-4.1778564051631", "10.7787", "6.6008"},
        {"0.3", "-2.9747379859399", "9.5675", "6.5927"},
        {"0.5", "-1.4703406847180", "8.0472", "6.5768"},
        {"0.6", "-0.9382193800580", "7.5073", "6.5890"},
        {"0.8", "-0.1065724371260", "6.6609", "6.5543"},
        {"1.0", "0.5290303076727", "6.0114", "6.5404"},
        {"1.5", "1.6490560732453", "4.8627", "6.5117"},
        {"2.5", "2.9291995226882", "3.562952", "6.492151"},
        {"3.0", "3.3163654395398", "3.1801450", "6.496510"},
        {"4.0", "3.7942454904008", "2.7241362", "6.5183816"},
        {"5.0", "4.0174441862565", "2.5243610", "6.5418051"},
        {"7.5", "4.1393245365993", "2.42550824", "6.5648327"},
        {"10.0", "4.1446014364987", "2.42193665", "6.56653808"},
        {"20.0", "4.1447298842431", "2.42186233", "6.56659221"},
        {"40.0", "4.1447298842432", "2.42186233", "6.56659221"},
    };
    return rows;
}

const std::vector<ChaRow>& table10_2s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "-6.4474579193881", "14.638", "8.1905"},
        {"0.2", "-4.3692335356773", "12.5593", "8.1900"},
        {"0.3", "-3.1539053277870", "11.343", "8.189"},
        {"0.5", "-1.6230786943140", "9.8112", "8.1881"},
        {"0.6", "-1.0766799706228", "9.2647", "8.1880"},
        {"0.8", "-0.2142040627489", "8.4027", "8.1884"},
        {"1.0", "0.4554622941859", "7.7347", "8.1901"},
        {"3.0", "3.8083926260850", "4.454", "8.262"},
        {"5.0", "5.4641608279724", "2.8173", "8.2814"},
        {"7.5", "6.7230262418630", "1.3022", "8.025"},
        {"10.0", "7.4461562639086", "0.2765", "7.7226"},
        {"12.0", "7.7816678917348", "-0.23875", "7.54291"},
        {"15.0", "8.0218565650054", "-0.6283", "7.3935"},
        {"20.0", "8.1057256203059", "-0.75320", "7.35252"},
        {"30.0", "8.1109253338427", "-0.75758", "7.35334"},
        {"40.0", "8.1109293629546", "-0.75758", "7.35334"},
    };
    return rows;
}

const std::vector<ChaRow>& table11_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "3948.737092", "0.01119745297", nullptr},
        {"0.2", "987.8765878", "0.04434444184", nullptr},
        {"0.3", "439.586678", "0.09875572074", nullptr},
        {"0.5", "158.8961123", "0.26851341481", nullptr},
        {"0.6", "110.6681458", "0.38237153819", nullptr},
        {"0.8", "62.739860", "0.66414501270", nullptr},
        {"1.0", "40.58509174", "1.01251135493", nullptr},
        {"1.5", "18.79543801", "2.12851618061", nullptr},
        {"2.5", "7.90930147", "4.99836645404", nullptr},
        {"3.0", "6.17657298", "6.49907451467", nullptr},
        {"4.0", "4.67890854", "9.08124532490", nullptr},
        {"5.0", "4.1962752", "10.73988673564", nullptr},
        {"7.5", "4.00555844", "11.92721564499", nullptr},
        {"10.0", "4.00009944", "11.99783793184", nullptr},
        {"20.0", "4.000000000", "11.99999999999", nullptr},
        {"40.0", "4.000000000", "12.00000000000", nullptr},
    };
    return rows;
}

const std::vector<ChaRow>& table11_2s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "15791.82122", "0.01284003608", nullptr},
        {"0.2", "3948.29263", "0.05141786856", nullptr},
        {"0.3", "1755.043513", "0.11583040943", nullptr},
        {"0.5", "632.0932498", "0.32261837746", nullptr},
        {"0.6", "439.0827084", "0.46525991900", nullptr},
        {"0.8", "247.1624885", "0.82981661465", nullptr},
        {"1.0", "158.32289745", "1.30128804642", nullptr},
        {"3.0", "17.70794067", "12.34353050970", nullptr},
        {"5.0", "6.144128803", "35.62201065982", nullptr},
        {"7.5", "2.538369575", "75.35119911871", nullptr},
        {"10.0", "1.4882497628", "114.09728048962", nullptr},
        {"12.0", "1.1870576", "138.20789171766", nullptr},
        {"15.0", "1.037249102", "158.95005505011", nullptr},
        {"20.0", "1.001488032", "167.39728283512", nullptr},
        {"30.0", "1.0000006963", "167.99942953967", nullptr},
        {"40.0", "1.000000000", "167.99999999101", nullptr},
    };
    return rows;
}

const std::vector<ChaRow>& table12_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "685.2442626946369", "0.000003957597", nullptr},
        {"0.2", "87.4022739883438", "0.000031421866", nullptr},
        {"0.3", "26.4463446487399", "0.00010521164", nullptr},
        {"0.5", "5.9724213649058", "0.0004788967", nullptr},
        {"0.6", "3.5387151037986", "0.0008200589", nullptr},
        {"0.8", "1.5693288422636", "0.0019064694", nullptr},
        {"1.0", "0.8479175599159", "0.0036453711", nullptr},
        {"1.5", "0.2926831761804", "0.011563379", nullptr},
        {"2.5", "0.0931826682370", "0.045113309", nullptr},
        {"3.0", "0.0680640975474", "0.069558611", nullptr},
        {"4.0", "0.0481916949634", "0.123248904", nullptr},
        {"5.0", "0.0421759263287", "0.167061238", nullptr},
        {"7.5", "0.0398551249937", "0.20591605", nullptr},
        {"10.0", "0.0397899027431", "0.208864145", nullptr},
        {"20.0", "0.0397887357477", "0.208974941", nullptr},
        {"40.0", "0.0397887357477", "0.208974941", nullptr},
    };
    return rows;
}

const std::vector<ChaRow>& table12_2s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "1467.6825381961700", "0.0000005701644", nullptr},
        {"0.2", "185.2798582651059", "0.000004564133", nullptr},
        {"0.3", "55.4384452351512", "0.000015417924", nullptr},
        {"0.5", "12.2085268184201", "0.00007158083", nullptr},
        {"0.6", "7.1325907889262", "0.00012393792", nullptr},
        {"0.8", "3.0655325000105", "0.00029535230", nullptr},
        {"1.0", "1.5979206523341", "0.0005811807", nullptr},
        {"3.0", "0.0656052279197", "0.02062639", nullptr},
        {"5.0", "0.0126465348027", "0.17568481", nullptr},
        {"7.5", "0.0030330727129", "1.0029980", nullptr},
        {"10.0", "0.0013566103366", "2.6889282", nullptr},
        {"12.0", "0.0009842621480", "4.3151579", nullptr},
        {"15.0", "0.0008167874743", "6.30370206", nullptr},
        {"20.0", "0.0007786672679", "7.5080031", nullptr},
        {"30.0", "0.0007771237450", "7.6497493", nullptr},
        {"40.0", "0.0007771237450", "7.6497493", nullptr},
    };
    return rows;
}

const std::vector<LabeledChaRows>& table10_refs_1s() {
    static const std::vector<LabeledChaRows> sets = {
        {"high-precision",
         {
             {"0.1", "-6.24450338251", "12.85356277", "6.60905939"},
             {"0.2", "-4.1778564034", "10.77871310", "6.60085670"},
             {"0.5", "-1.47034068299", "8.04723315", "6.57689247"},
             {"0.6", "-0.9382193783", "7.50740813", "6.56918875"},
             {"1.0", "0.52903030941", "6.01144522", "6.54047553"},
             {"3.0", "3.31636544150", "3.18014501", "6.49651045"},
             {"5.0", "4.01744418917", "2.52436106", "6.54180525"},
             {"10.0", "4.14460144459", "2.42193666", "6.56653810"},
             {"40.0", "4.14472988585", "2.42186234", "6.56659222"},
         }},
        {"variational",
         {
             {"0.1", "-6.2445", "12.8536", "6.6091"},
             {"0.5", "-1.4702", "8.0473", "6.5771"},
             {"1.0", "0.5290", "6.0115", "6.5405"},
         }},
        {"early-numerical",
         {
             {"0.5", "-1.47", "7.967", "6.497"},
             {"1.0", "0.529", "5.991", "6.52"},
             {"3.0", "3.316", "3.183", "6.499"},
             {"5.0", "4.011", "2.533", "6.544"},
         }},
        {"interpolatory",
         {
             {"1.0", "0.52903", "6.011673", "6.54703"},
             {"3.0", "3.316365", "3.180236", "6.496602"},
         }},
    };
    return sets;
}

const std::vector<LabeledChaRows>& table10_refs_2s() {
    static const std::vector<LabeledChaRows> sets = {
        {"high-precision",
         {
             {"0.2", "-4.3692335342", "12.55940257", "8.19016903"},
             {"0.6", "-1.076679969", "9.26455393", "8.18787396"},
             {"1.0", "0.4554622961", "7.73472053", "8.19018283"},
             {"3.0", "3.8083926278", "4.45432335", "8.26271598"},
             {"5.0", "5.4641608298", "2.8174878158", "8.28164864"},
             {"10.0", "7.4461562656", "0.27655185", "7.72270812"},
             {"20.0", "8.1057256268", "-0.75319646", "7.35252916"},
             {"30.0", "8.1109253319", "-0.75758021", "7.35334511"},
         }},
    };
    return sets;
}

const std::vector<ChaRow>& table11_variational_1s() {
    static const std::vector<ChaRow> rows = {
        {"0.1", "3947.738178", "0.011309", nullptr},
        {"0.2", "987.890146", "0.043982", nullptr},
        {"0.3", "439.591750", "0.099274", nullptr},
        {"0.5", "158.896729", "0.269820", nullptr},
        {"1.0", "40.585607", "1.012849", nullptr},
        {"5.0", "4.195911", "10.740746", nullptr},
        {"40.0", "3.999875", "11.999627", nullptr},
    };
    return rows;
}

const std::vector<KernelRow>& kernel_rows() {
    static const std::vector<KernelRow> rows = {
        {0, {}, {{0, 1.0}}},
        {1, {{0, 1.0}}, {{1, -1.0}}},
        {2, {{1, 3.0}}, {{0, 1.0}, {2, -3.0}}},
        {3, {{0, 1.0}, {2, -15.0}}, {{1, -6.0}, {3, 15.0}}},
        {4, {{1, 30.0}, {3, -315.0}}, {{0, 1.0}, {2, -105.0}, {4, 315.0}}},
        {5,
         {{0, 1.0}, {2, -105.0}, {4, 945.0}},
         {{1, -15.0}, {3, 420.0}, {5, -945.0}}},
        {6,
         {{1, 21.0}, {3, -1260.0}, {5, 10395.0}},
         {{0, 1.0}, {2, -210.0}, {4, 4725.0}, {6, -10395.0}}},
        {7,
         {{0, 1.0}, {2, -378.0}, {4, 17325.0}, {6, -135135.0}},
         {{1, -28.0}, {3, 3150.0}, {5, -23100.0}, {7, 135135.0}}},
        {8,
         {{1, 36.0}, {3, -6930.0}, {5, 270270.0}, {7, -2027025.0}},
         {{0, 1.0}, {2, -630.0}, {4, 51975.0}, {6, -945945.0},
          {8, 2027025.0}}},
        {9,
         {{0, 1.0}, {2, -990.0}, {4, 135135.0}, {6, -4729725.0},
          {8, 34459425.0}},
         {{1, -45.0}, {3, 13860.0}, {5, -945945.0}, {7, 16216200.0},
          {9, -34459425.0}}},
    };
    return rows;
}

const std::vector<Exclusion>& exclusions() {
    // The Tsallis and Renyi columns of one table are exact transforms of the
    // same entropic moment: T = (exp((1 - a) R) - 1) / (1 - a). Cells listed
    // here violate that identity against their own printed Renyi partner by
    // more than twice the printed resolution, so they carry source-side
    // quadrature noise; `frozen` is the value recomputed from the moment with
    // an independent high-precision oracle, which does satisfy the identity.
    static const char* kInconsistent =
        "printed value violates the exact Renyi-Tsallis transform against "
        "its own printed partner column; frozen to the recomputed moment";
    static const std::vector<Exclusion> list = {
        {"T3", "2", "T_alpha", "3.498565470109", "3.4985655552611395",
         kInconsistent},
        {"T3", "3", "T_alpha", "3.488489128929", "3.4884897479835707",
         kInconsistent},
        {"T3", "4", "T_alpha", "3.485418316773", "3.4854088335213578",
         kInconsistent},
        {"T3", "5", "T_alpha", "3.484336298921", "3.4843341609924000",
         kInconsistent},
        {"T3", "7", "T_alpha", "3.483896265386", "3.4838960265064611",
         kInconsistent},
        {"T3", "8", "T_alpha", "3.483938671551", "3.4839395460896756",
         kInconsistent},
        {"T3", "9", "T_alpha", "3.484031759027", "3.4840331611148139",
         kInconsistent},
        {"T5", "4p", "T_r", "122.74685003", "122.74619672571664",
         kInconsistent},
        {"T5", "4d", "T_r", "113.56339555", "113.25347226003058",
         kInconsistent},
        {"T5", "10s", "T_r", "1026.566912", "1026.5468658870534",
         kInconsistent},
        {"T5", "10p", "T_r", "1020.508405", "1020.4208230382935",
         kInconsistent},
        {"T5", "10d", "T_r", "1008.283591", "1008.1508188678354",
         kInconsistent},
        {"T5", "10f", "T_r", "989.659422", "989.62624017029555",
         kInconsistent},
        {"T5", "10g", "T_r", "964.605525", "964.57570386180589",
         kInconsistent},
        {"T5", "10h", "T_r", "932.546877", "932.45874705122134",
         kInconsistent},
        {"T5", "10i", "T_r", "893.652698", "892.24675791541655",
         kInconsistent},
        {"T5", "10k", "T_r", "841.846208", "841.89577405800121",
         kInconsistent},
        {"T5", "10l", "T_r", "776.747706", "776.74469440325508",
         kInconsistent},
        {"T5", "10d", "T_p", "-7.57534e8", "-760891653.56609999",
         kInconsistent},
        {"T5", "10f", "T_p", "-2.98007e8", "-298003091.30427567",
         kInconsistent},
        {"T5", "10g", "T_p", "-1.33389e8", "-133384008.51379406",
         kInconsistent},
        {"T5", "10h", "T_p", "-6.29880e7", "-62980985.100375116",
         kInconsistent},
        {"T5", "10i", "T_p", "-2.97745e7", "-29776863.622528600",
         kInconsistent},
        {"T5", "10k", "T_p", "-1.34213e7", "-13415412.229436512",
         kInconsistent},
        {"T5", "10l", "T_p", "-5.37571e7", "-5375716.5293176583",
         "exponent misprint: the printed magnitude 1e7 is inconsistent with "
         "both the printed Renyi partner and the monotone trend of the "
         "column; the mantissa matches the recomputed value at 1e6"},
        {"T7", "2p", "E_r", "0.001398822737580", "0.009765625",
         "the printed cell is exactly 9/(20 pi) times the radial moment, "
         "i.e. it carries the angular disequilibrium factor of the l=1, m=0 "
         "harmonic, while every other row of the column is the radial-only "
         "functional; the radial moment of 2p is identically 720/73728 = "
         "0.009765625, the same closed form as the printed 2s cell, and the "
         "value is frozen to that exact number"},
        {"T10-1s", "0.6", "combined", "6.5890", "6.5691",
         "printed total disagrees with the sum of its own printed summands "
         "(-0.9382193800580 + 7.5073 = 6.5691)"},
        {"T-kernel", "l=7", "b5", "-2370", "-23100",
         "coefficient misprint: only the corrected value keeps "
         "f(1,x)/(x j_7(x)) independent of x"},
    };
    return list;
}

const Exclusion* find_exclusion(const std::string& table,
                                const std::string& row,
                                const std::string& column) {
    for (const Exclusion& e : exclusions()) {
        if (table == e.table && row == e.row && column == e.column) {
            return &e;
        }
    }
    return nullptr;
}

double parse(const char* printed) { return std::strtod(printed, nullptr); }

int significant_digits(const char* printed) {
    bool seen_nonzero = false;
    int count = 0;
    for (const char* p = printed; *p != '\0' && *p != 'e' && *p != 'E'; ++p) {
        if (*p >= '0' && *p <= '9') {
            if (*p != '0') seen_nonzero = true;
            if (seen_nonzero) ++count;
        }
    }
    return count;
}

double ulp_rel(const char* printed) {
    int frac_digits = 0;
    bool seen_point = false;
    int exp10 = 0;
    const char* p = printed;
    for (; *p != '\0' && *p != 'e' && *p != 'E'; ++p) {
        if (*p == '.') {
            seen_point = true;
        } else if (*p >= '0' && *p <= '9' && seen_point) {
            ++frac_digits;
        }
    }
    if (*p == 'e' || *p == 'E') exp10 = std::atoi(p + 1);
    const double ulp = std::pow(10.0, exp10 - frac_digits);
    const double v = std::abs(parse(printed));
    return (v > 0.0) ? ulp / v : ulp;
}

}  // namespace hatom::golden
